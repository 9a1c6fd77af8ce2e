#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aperiodica/autocorr.hpp"
#include "aperiodica/diffraction.hpp"
#include "aperiodica/hull.hpp"
#include "aperiodica/io.hpp"
#include "aperiodica/patches.hpp"
#include "aperiodica/sequences.hpp"
#include "aperiodica/svg.hpp"

namespace py = pybind11;
using namespace aperiodica;

namespace {

Region make_region(const std::string& shape, const Vec& size, std::optional<Vec> center) {
  const int dim = shape == "ball" ? static_cast<int>(center ? center->size() : 1) : static_cast<int>(size.size());
  Vec c = center ? *center : Vec::Zero(dim);
  if (shape == "ball") {
    if (size.size() != 1) throw Error("region: ball takes a single radius");
    return Region::ball(c, size[0]);
  }
  if (shape == "box") return Region::box(c, size);
  throw Error("region: shape is 'ball' or 'box'");
}

}  // namespace

PYBIND11_MODULE(_aperiodica, m) {
  m.doc() = "aperiodica core bindings";
  m.attr("__version__") = version();
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<Region>(m, "Region")
      .def_static("ball", py::overload_cast<int, double>(&Region::ball), py::arg("dim"), py::arg("radius"))
      .def_static("box", py::overload_cast<Vec>(&Region::box), py::arg("half_widths"))
      .def_static("make", &make_region, py::arg("shape"), py::arg("size"), py::arg("center") = py::none())
      .def_property_readonly("dim", &Region::dim)
      .def_readonly("radius", &Region::radius)
      .def_readonly("center", &Region::center)
      .def("depth", &Region::depth)
      .def("origin_depth", &Region::origin_depth)
      .def("volume", &Region::volume)
      .def("__repr__", [](const Region& r) { return "Region(" + r.describe() + ")"; });

  py::class_<PointSet>(m, "PointSet")
      .def(py::init<Mat, Region, std::optional<IMat>, std::string>(), py::arg("points"), py::arg("region"),
           py::arg("labels") = py::none(), py::arg("meta") = "")
      .def_property_readonly("dim", &PointSet::dim)
      .def("__len__", &PointSet::size)
      .def_property_readonly("points", &PointSet::points)
      .def_property_readonly("region", &PointSet::region)
      .def_property_readonly("has_labels", &PointSet::has_labels)
      .def_property_readonly("labels", [](const PointSet& p) -> std::optional<IMat> {
        if (!p.has_labels()) return std::nullopt;
        return p.labels();
      })
      .def_property_readonly("meta", &PointSet::meta)
      .def_property_readonly("min_distance", &PointSet::min_distance)
      .def("translated", &PointSet::translated);

  m.def("crop", &crop);

  py::class_<DeloneParams>(m, "DeloneParams")
      .def_readonly("packing_radius", &DeloneParams::packing_radius)
      .def_readonly("covering_radius", &DeloneParams::covering_radius)
      .def_readonly("exact", &DeloneParams::exact);
  m.def("delone_params", &delone_params);
  py::class_<DifferenceSet>(m, "DifferenceSet")
      .def_readonly("vectors", &DifferenceSet::vectors)
      .def_readonly("multiplicities", &DifferenceSet::multiplicities)
      .def_readonly("exact", &DifferenceSet::exact);
  m.def("difference_set", &difference_set);
  m.def("meyer_diagnostic", &meyer_diagnostic);

  py::class_<Word>(m, "Word")
      .def_static("parse", &Word::parse)
      .def_readonly("symbols", &Word::symbols)
      .def_readonly("origin", &Word::origin)
      .def("__str__", &Word::to_string);
  m.def("seq_to_delone", [](const Word& w, const std::map<std::string, double>& lengths) {
    std::map<int, double> l;
    for (const auto& [k, v] : lengths) {
      if (k.size() != 1) throw Error("seq_to_delone: letters are single characters");
      l[static_cast<unsigned char>(k[0])] = v;
    }
    return seq_to_delone(w, l);
  });
  m.def("delone_to_seq", &delone_to_seq);
  m.def("factor_complexity", &factor_complexity);
  m.def("fibonacci_word", &fibonacci_word);

  py::class_<Window>(m, "Window")
      .def_static("interval", &Window::interval, py::arg("a"), py::arg("b"), py::arg("regular") = true)
      .def_static("ball", &Window::ball, py::arg("dim"), py::arg("radius"), py::arg("regular") = true)
      .def_property_readonly("kind", &Window::kind_name)
      .def("volume", &Window::volume)
      .def("contains", &Window::contains);
  m.def("window_fourier", &window_fourier);

  py::class_<CutProjectScheme>(m, "CutProjectScheme")
      .def_property_readonly("phys_dim", &CutProjectScheme::phys_dim)
      .def_property_readonly("int_dim", &CutProjectScheme::int_dim)
      .def_property_readonly("basis", &CutProjectScheme::basis)
      .def_property_readonly("covolume", &CutProjectScheme::covolume)
      .def_property_readonly("density", &CutProjectScheme::density)
      .def_property_readonly("warnings", &CutProjectScheme::warnings)
      .def_property_readonly("window", &CutProjectScheme::window)
      .def("to_json", &scheme_to_json);
  m.def("builtin_scheme", [](const std::string& n) { return builtin_scheme(n); });
  m.def("scheme_from_json", [](const std::string& t) { return scheme_from_json(t); });
  m.def("model_set_points", py::overload_cast<const CutProjectScheme&, double>(&model_set_points));

  py::class_<ModuleElement>(m, "ModuleElement")
      .def_readonly("q", &ModuleElement::q)
      .def_readonly("k", &ModuleElement::k)
      .def_readonly("k_star", &ModuleElement::k_star);
  py::class_<FourierModule>(m, "FourierModule")
      .def_readonly("elements", &FourierModule::elements)
      .def("__len__", &FourierModule::size);
  m.def("fourier_module", &fourier_module);

  py::class_<PatchCensus>(m, "PatchCensus")
      .def_readonly("radius", &PatchCensus::radius)
      .def_readonly("centers_considered", &PatchCensus::centers_considered)
      .def_property_readonly("counts", [](const PatchCensus& c) {
        std::vector<std::size_t> out;
        for (const auto& k : c.classes) out.push_back(k.count);
        return out;
      })
      .def("n_classes", &PatchCensus::n_classes);
  m.def("patch_census", &patch_census);
  py::class_<EntropyPoint>(m, "EntropyPoint")
      .def_readonly("s", &EntropyPoint::s)
      .def_readonly("n_patches", &EntropyPoint::n_patches)
      .def_readonly("entropy_density", &EntropyPoint::entropy_density);
  m.def("entropy_estimate", &entropy_estimate);

  py::enum_<Estimator>(m, "Estimator")
      .value("PairsInBall", Estimator::PairsInBall)
      .value("Anchored", Estimator::Anchored);
  py::class_<WeightedComb>(m, "WeightedComb")
      .def_readonly("support", &WeightedComb::support)
      .def_readonly("weights", &WeightedComb::weights)
      .def_readonly("exact", &WeightedComb::exact)
      .def("weight_at", &WeightedComb::weight_at);
  m.def("autocorr", &autocorr, py::arg("p"), py::arg("n"), py::arg("s_max"),
        py::arg("estimator") = Estimator::Anchored);
  m.def("overlap_oracle", &overlap_oracle);

  py::class_<SmoothingKernel> kernel(m, "SmoothingKernel");
  py::enum_<SmoothingKernel::Shape>(kernel, "Shape")
      .value("Triangular", SmoothingKernel::Shape::Triangular)
      .value("RaisedCosine", SmoothingKernel::Shape::RaisedCosine);
  kernel.def(py::init<SmoothingKernel::Shape, double>())
      .def("fourier", &SmoothingKernel::fourier)
      .def("autocorrelation", &SmoothingKernel::autocorrelation)
      .def("cutoff_frequency", &SmoothingKernel::cutoff_frequency);

  py::class_<BTAmplitude>(m, "BTAmplitude")
      .def_readonly("xi", &BTAmplitude::xi)
      .def_readonly("s", &BTAmplitude::s)
      .def_readonly("value", &BTAmplitude::value);
  m.def("bt_amplitude", &bt_amplitude);
  py::class_<Peak>(m, "Peak")
      .def_readonly("xi", &Peak::xi)
      .def_readonly("intensity_bt", &Peak::intensity_bt)
      .def_readonly("intensity_closed", &Peak::intensity_closed)
      .def_readonly("q_label", &Peak::q_label)
      .def_readonly("bt_sequence", &Peak::bt_sequence);
  py::class_<PeakList>(m, "PeakList")
      .def_readonly("entries", &PeakList::entries)
      .def_readonly("s_used", &PeakList::s_used)
      .def("__len__", &PeakList::size);
  m.def("peak_scan", &peak_scan, py::arg("p"), py::arg("candidates"), py::arg("s_list"), py::arg("threads") = 1);
  m.def("module_scan", &module_scan, py::arg("p"), py::arg("cps"), py::arg("module"), py::arg("s_list"),
        py::arg("threads") = 1);
  m.def("grid_candidates", &grid_candidates);
  m.def("model_set_intensity", &model_set_intensity);
  py::class_<ConsistencyResult>(m, "ConsistencyResult")
      .def_readonly("lhs", &ConsistencyResult::lhs)
      .def_readonly("rhs", &ConsistencyResult::rhs)
      .def_readonly("rel_error", &ConsistencyResult::rel_error);
  m.def("pure_point_consistency", &pure_point_consistency);
  m.def("symmetry_check", &symmetry_check);
  m.def("rotation_2d", &rotation_2d);
  m.def("peaks_svg", &peaks_svg, py::arg("peaks"), py::arg("dim"), py::arg("floor") = 1e-6);

  m.def("hull_metric", &hull_metric);
  py::class_<TorusSystem>(m, "TorusSystem")
      .def(py::init<const CutProjectScheme&>())
      .def("act", &TorusSystem::act)
      .def("frequency", &TorusSystem::frequency);
  m.def("torus_address", &torus_address);
  py::class_<TrigTerm>(m, "TrigTerm")
      .def(py::init<IVec, Complex>())
      .def_readwrite("q", &TrigTerm::q)
      .def_readwrite("coeff", &TrigTerm::coeff);
  py::class_<TrigPolynomial>(m, "TrigPolynomial")
      .def(py::init([](std::vector<TrigTerm> t) { return TrigPolynomial{std::move(t)}; }))
      .def_readonly("terms", &TrigPolynomial::terms)
      .def("__call__", &TrigPolynomial::operator());
  py::class_<Cocycle>(m, "Cocycle")
      .def(py::init([](Vec xi) { return Cocycle{std::move(xi)}; }))
      .def_readonly("xi", &Cocycle::xi);
  py::enum_<AverageMethod>(m, "AverageMethod")
      .value("Auto", AverageMethod::Auto)
      .value("ClosedForm", AverageMethod::ClosedForm)
      .value("Quadrature", AverageMethod::Quadrature);
  m.def("ww_average", &ww_average, py::arg("ts"), py::arg("f"), py::arg("c"), py::arg("omega"), py::arg("n"),
        py::arg("quad_step"), py::arg("method") = AverageMethod::Auto);
  m.def("ww_projection", &ww_projection);
  py::class_<UniformPoint>(m, "UniformPoint")
      .def_readonly("n", &UniformPoint::n)
      .def_readonly("sup_dev", &UniformPoint::sup_dev);
  m.def("ww_uniform_test", &ww_uniform_test, py::arg("ts"), py::arg("f"), py::arg("c"), py::arg("omega_samples"),
        py::arg("n_list"), py::arg("quad_step"), py::arg("method") = AverageMethod::Auto);
  m.def("omega_grid", &omega_grid, py::arg("dim"), py::arg("per_dim") = 100);
  m.def("max_quad_step", &max_quad_step);

  m.def("points_to_text", [](const PointSet& p) {
    std::ostringstream os;
    write_points(os, p);
    return os.str();
  });
  m.def("points_from_text", [](const std::string& s) {
    std::istringstream is(s);
    return read_points(is);
  });
}
