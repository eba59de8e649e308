// Copyright 2026 The wnk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wnk/denotational.hpp"
#include "wnk/parser.hpp"
#include "wnk/query.hpp"

namespace py = pybind11;

namespace {

/// A parsed policy bundled with its schema and semiring; automata are built
/// per call, which is cheap at the sizes the bindings are meant for.
struct Policy {
  wnk::FieldSchema schema;
  wnk::PolPtr pol;
  const wnk::Semiring* sr;
  std::optional<wnk::TopologySpec> topo;

  std::string str() const { return wnk::print_policy(schema, *sr, pol); }

  wnk::QueryReport query(wnk::QueryMode mode, const std::string& bound,
                         const std::string& packet, const std::string& history,
                         int approx, std::string ingress,
                         std::string egress) const {
    wnk::QueryRequest req;
    req.mode = mode;
    req.bound = bound;
    req.packet = packet;
    req.history = history;
    req.approx = approx;
    if (ingress.empty() && topo) ingress = topo->ingress;
    if (egress.empty() && topo) egress = topo->egress;
    req.ingress = ingress;
    req.egress = egress;
    return wnk::run_query(req, pol, schema, *sr, topo ? &*topo : nullptr);
  }

  std::string check_safe(const std::string& bound, const std::string& ingress,
                         const std::string& egress) const {
    return query(wnk::QueryMode::Safe, bound, "", "", -1, ingress, egress)
        .json_text;
  }
  std::string check_reach(const std::string& bound, const std::string& ingress,
                          const std::string& egress) const {
    return query(wnk::QueryMode::Reach, bound, "", "", -1, ingress, egress)
        .json_text;
  }
  std::string eval(const std::string& packet, const std::string& history) const {
    wnk::QueryReport rep =
        query(wnk::QueryMode::Eval, "", packet, history, -1, "", "");
    return sr->print(*rep.weight);
  }
  std::string eval_approx(const std::string& packet, int depth) const {
    return query(wnk::QueryMode::Eval, "", packet, "", depth, "", "")
        .json_text;
  }
  std::string total_weight() const {
    wnk::Wnka a(pol, schema, sr);
    return sr->print(wnk::total_weight(a));
  }
  std::string dump() const {
    wnk::Wnka a(pol, schema, sr);
    return wnk::dump_automaton_json(a);
  }
  size_t num_states() const { return wnk::Wnka(pol, schema, sr).num_states(); }
};

const wnk::Semiring& sr_by_name(const std::string& name) {
  const wnk::Semiring* sr = wnk::Semiring::find(name);
  if (!sr) throw wnk::ValidationError("unknown semiring '" + name + "'");
  return *sr;
}

Policy parse(const std::string& text, const std::string& semiring,
             const std::string& schema_text) {
  const wnk::Semiring& sr = sr_by_name(semiring);
  std::optional<wnk::FieldSchema> override_schema;
  if (!schema_text.empty())
    override_schema = wnk::parse_fields_block(schema_text);
  wnk::ParsedPolicy parsed = wnk::parse_policy_file(
      text, sr, override_schema ? &*override_schema : nullptr);
  return Policy{std::move(parsed.schema), std::move(parsed.policy), &sr, {}};
}

Policy from_topology(const std::string& path, const std::string& flavor,
                     const std::string& semiring) {
  const wnk::Semiring& sr = sr_by_name(semiring);
  wnk::TopologySpec topo = wnk::load_topology(path);
  wnk::FieldSchema schema = topo.make_schema();
  wnk::PolPtr pol =
      wnk::topology_to_policy(topo, wnk::parse_flavor(flavor), schema, sr);
  return Policy{std::move(schema), std::move(pol), &sr, std::move(topo)};
}

}  // namespace

PYBIND11_MODULE(wnetkat, m) {
  m.doc() = "weighted NetKAT policies, automata and decision procedures";

  py::register_exception<wnk::CapabilityError>(m, "CapabilityError");
  py::register_exception<wnk::ResourceError>(m, "ResourceError");

  m.def("semirings", [] {
    std::vector<std::string> names;
    for (const wnk::Semiring* sr : wnk::Semiring::all())
      names.push_back(sr->name());
    return names;
  });

  m.def("sr_add", [](const std::string& s, const std::string& a,
                     const std::string& b) {
    const wnk::Semiring& sr = sr_by_name(s);
    return sr.print(sr.add(sr.parse(a), sr.parse(b)));
  });
  m.def("sr_mul", [](const std::string& s, const std::string& a,
                     const std::string& b) {
    const wnk::Semiring& sr = sr_by_name(s);
    return sr.print(sr.mul(sr.parse(a), sr.parse(b)));
  });
  m.def("sr_star", [](const std::string& s, const std::string& a) {
    const wnk::Semiring& sr = sr_by_name(s);
    return sr.print(sr.star(sr.parse(a)));
  });
  m.def("sr_leq", [](const std::string& s, const std::string& a,
                     const std::string& b) {
    const wnk::Semiring& sr = sr_by_name(s);
    return sr.leq(sr.parse(a), sr.parse(b));
  });

  py::class_<Policy>(m, "Policy")
      .def("__str__", &Policy::str)
      .def("check_safe", &Policy::check_safe, py::arg("bound"),
           py::arg("ingress") = "", py::arg("egress") = "")
      .def("check_reach", &Policy::check_reach, py::arg("bound"),
           py::arg("ingress") = "", py::arg("egress") = "")
      .def("eval", &Policy::eval, py::arg("packet"), py::arg("history"))
      .def("eval_approx", &Policy::eval_approx, py::arg("packet"),
           py::arg("depth"))
      .def("total_weight", &Policy::total_weight)
      .def("dump", &Policy::dump)
      .def("num_states", &Policy::num_states);

  m.def("parse", &parse, py::arg("text"), py::arg("semiring"),
        py::arg("schema") = "",
        "Parse a .wnk policy (with fields header or a separate schema).");
  m.def("from_topology", &from_topology, py::arg("path"), py::arg("flavor"),
        py::arg("semiring"),
        "Load a topology JSON file and generate its network policy.");
}
