#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eulerpart/bijections.hpp"
#include "eulerpart/verify.hpp"

namespace py = pybind11;
using namespace eulerpart;

namespace {

using Parts = std::vector<long long>;

Partition to_partition(const Parts& parts)
{
    return Partition::from_parts(parts);
}

py::dict stats_dict(const StatisticsBundle& s)
{
    py::dict d;
    d["weight"] = s.weight;
    d["l"] = s.length;
    d["largest"] = s.largest;
    d["la"] = s.alt_sum;
    d["lo"] = s.odd_parts;
    d["nc"] = s.chains;
    d["nd"] = s.distinct;
    d["no"] = s.odd_mult_parts;
    d["r2"] = s.r2;
    return d;
}

InsertionParams make_params(long long n, const std::set<long long>& residues)
{
    return InsertionParams{n, residues};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "partition bijections and family enumeration";

    m.def("conjugate",
          [](const Parts& p) { return conjugate(to_partition(p)).parts(); },
          py::arg("parts"));
    m.def("two_modular_conjugate",
          [](const Parts& p) {
              return two_modular_conjugate(to_partition(p)).parts();
          },
          py::arg("parts"));
    m.def("statistics",
          [](const Parts& p) { return stats_dict(statistics(to_partition(p))); },
          py::arg("parts"));

    m.def("varphi",
          [](const Parts& p) { return varphi(to_partition(p)).parts(); },
          py::arg("parts"));
    m.def("varphi_inv",
          [](const Parts& p) { return varphi_inv(to_partition(p)).parts(); },
          py::arg("parts"));
    m.def("psi", [](const Parts& p) { return psi(to_partition(p)).parts(); },
          py::arg("parts"));
    m.def("psi_inv",
          [](const Parts& p) { return psi_inv(to_partition(p)).parts(); },
          py::arg("parts"));
    m.def("phi",
          [](const Parts& p, long long n, const std::set<long long>& residues) {
              return phi(to_partition(p), make_params(n, residues)).parts();
          },
          py::arg("parts"), py::arg("n") = 2,
          py::arg("residues") = std::set<long long>{1, 2, 3});
    m.def("phi_inv",
          [](const Parts& p, long long n, const std::set<long long>& residues) {
              return phi_inv(to_partition(p), make_params(n, residues)).parts();
          },
          py::arg("parts"), py::arg("n") = 2,
          py::arg("residues") = std::set<long long>{1, 2, 3});
    m.def("delta",
          [](const Parts& p) { return delta(to_partition(p)).parts(); },
          py::arg("parts"));
    m.def("delta_inv",
          [](const Parts& p) { return delta_inv(to_partition(p)).parts(); },
          py::arg("parts"));
    m.def("delta_trace",
          [](const Parts& p) {
              DeltaTrace t = delta_trace(to_partition(p));
              py::dict d;
              d["alpha"] = t.alpha.parts();
              d["beta"] = t.beta.parts();
              d["mu"] = t.mu.parts();
              return d;
          },
          py::arg("parts"));

    m.def("enumerate_family",
          [](const std::string& spec, long long n) {
              std::vector<Parts> out;
              for (const Partition& p : FamilySpec::parse(spec).enumerate(n))
                  out.push_back(p.parts());
              return out;
          },
          py::arg("spec"), py::arg("n"));
    m.def("cardinality",
          [](const std::string& spec, long long n) {
              return FamilySpec::parse(spec).cardinality(n);
          },
          py::arg("spec"), py::arg("n"));
    m.def("contains",
          [](const std::string& spec, const Parts& p) {
              return FamilySpec::parse(spec).contains(to_partition(p));
          },
          py::arg("spec"), py::arg("parts"));

    m.def("verify",
          [](const std::string& suite, long long max_n, long long order) {
              py::list out;
              for (const CheckResult& r : verify_suite(suite, max_n, order)) {
                  py::dict d;
                  d["name"] = r.name;
                  d["ok"] = r.ok;
                  d["checks"] = r.checks;
                  d["witness"] = r.witness;
                  out.append(std::move(d));
              }
              return out;
          },
          py::arg("suite"), py::arg("max_n") = 20, py::arg("order") = 20);

    m.def("parse_partition",
          [](const std::string& text) { return parse_partition(text).parts(); },
          py::arg("text"));
    m.def("format_partition",
          [](const Parts& p) { return format_partition(to_partition(p)); },
          py::arg("parts"));
}
