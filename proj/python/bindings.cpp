#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nestfold/check.hpp"
#include "nestfold/emit.hpp"
#include "nestfold/parse.hpp"

namespace py = pybind11;
using namespace nestfold;

namespace {

Artifacts derive_from_source(const std::string& src, const std::string& root) {
  Program p = parse_program(src);
  return derive_artifacts(p, root);
}

check::Bounds make_bounds(const std::string& profile, py::object max_size, py::object max_index) {
  check::Bounds b;
  b.profile = check::profile_from_name(profile);
  if (!max_size.is_none()) b.max_size = max_size.cast<std::size_t>();
  if (!max_index.is_none()) b.max_index = max_index.cast<std::size_t>();
  return b;
}

py::dict report_dict(const check::CheckReport& r) {
  py::dict d;
  d["property"] = r.property;
  d["cases"] = r.cases;
  d["status"] = r.pass ? "pass" : "fail";
  if (r.counterexample) {
    py::dict cex;
    cex["detail"] = r.counterexample->detail;
    cex["index"] = print_index(r.counterexample->index);
    py::dict inputs;
    for (const auto& [k, v] : r.counterexample->inputs)
      inputs[py::str(k)] = print_value(v);
    cex["inputs"] = inputs;
    cex["lhs"] = print_value(r.counterexample->lhs);
    cex["rhs"] = print_value(r.counterexample->rhs);
    d["counterexample"] = cex;
  }
  d["ms"] = r.wall_ms;
  return d;
}

Value resolve(const std::string& text) {
  try {
    return corpus::lookup_literal(text);
  } catch (const EvalError&) {
    return parse_value(text);
  }
}

corpus::ValueFn named_fn(const std::string& name) {
  if (name == "succ") return [](const Value& v) { return Value::con("Succ", {v}); };
  if (name == "id") return [](const Value& v) { return v; };
  if (name == "inc") return [](const Value& v) { return Value::nat(v.num + 1); };
  throw EvalError("unknown function '" + name + "' (succ, id, inc)");
}

}  // namespace

PYBIND11_MODULE(_nestfold, m) {
  m.doc() = "dependently typed folds for nested data types";

  m.def("parse_check", [](const std::string& src) {
    kind_check(parse_program(src));
    return true;
  });
  m.def("print_program",
        [](const std::string& src) { return print_program(parse_program(src)); });
  m.def("closure", [](const std::string& src, const std::string& root) {
    Program p = parse_program(src);
    kind_check(p);
    return reachability_closure(p, root);
  });

  m.def("derive_summary", [](const std::string& src, const std::string& root) {
    Artifacts a = derive_from_source(src, root);
    std::string out = "index " + a.index_type.name + ":";
    for (const auto& c : a.index_type.all_ctors())
      out += " " + c.name + "/" + std::to_string(c.arity);
    out += "\nfold " + a.fold.name + " (" + std::to_string(a.fold.cases.size()) + " cases):\n";
    out += emit::fold_case_summary(a.fold);
    return out;
  });
  m.def("derive_json", [](const std::string& src, const std::string& root) {
    return emit::emit_json(derive_from_source(src, root));
  });
  m.def(
      "emit_agda",
      [](const std::string& src, const std::string& root, std::vector<std::string> includes) {
        emit::EmitOptions opts;
        opts.includes.insert(includes.begin(), includes.end());
        return emit::emit_agda(derive_from_source(src, root), opts);
      },
      py::arg("source"), py::arg("root"), py::arg("includes") = std::vector<std::string>{});
  m.def(
      "emit_corpus_agda",
      [](const std::string& root, std::vector<std::string> includes) {
        emit::EmitOptions opts;
        opts.includes.insert(includes.begin(), includes.end());
        if (root == "Bush") return emit::emit_agda(corpus::bush_artifacts(), opts);
        if (root == "Incr") return emit::emit_agda(corpus::incr_artifacts(), opts);
        if (root == "Term") return emit::emit_agda(corpus::term_artifacts(), opts);
        if (root == "TermE") return emit::emit_agda(corpus::terme_artifacts(), opts);
        if (root == "D") return emit::emit_agda(corpus::d_artifacts(), opts);
        throw EvalError("corpus artifact bundles exist for Bush, Incr, Term, TermE and D");
      },
      py::arg("root"), py::arg("includes") = std::vector<std::string>{});

  m.def("corpus_list", [] {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& e : corpus::entries()) out.emplace_back(e.name, e.kind, e.section);
    return out;
  });
  m.def("literal", [](const std::string& name) { return print_value(corpus::lookup_literal(name)); });

  m.def("sum_bush", [](const std::string& v) { return corpus::sum_bush(resolve(v)); });
  m.def("length_bush", [](const std::string& v) { return corpus::length_bush(resolve(v)); });
  m.def("sum_aux", [](const std::string& v) { return corpus::sum_aux(resolve(v)); });
  m.def("sum_d", [](const std::string& v) { return corpus::sum_d(resolve(v)); });
  m.def("sum_i", [](const std::string& v) { return corpus::sum_i(resolve(v)); });
  m.def("redex", [](const std::string& v) { return print_value(corpus::redex_term(resolve(v))); });
  m.def("redex_e",
        [](const std::string& v) { return print_value(corpus::redex_terme(resolve(v))); });
  m.def("cvt_e", [](std::uint64_t n, const std::string& v) {
    return print_value(corpus::cvt_terme(n, resolve(v)));
  });
  m.def("show_term_char",
        [](const std::string& v) { return corpus::show_term_char(resolve(v)); });
  m.def("map_incr", [](std::uint64_t l, const std::string& fn, const std::string& v) {
    return print_value(corpus::map_incr(l, named_fn(fn), resolve(v)));
  });
  m.def("abst", [](const std::string& x, const std::string& t) {
    return print_value(corpus::abst_term(resolve(x), resolve(t)));
  });
  m.def("subst", [](std::uint64_t n, const std::string& s, const std::string& t) {
    return print_value(corpus::subst_term(n, resolve(s), resolve(t)));
  });
  m.def("subst_e", [](std::uint64_t n, const std::string& s, const std::string& t) {
    return print_value(corpus::subst_terme(n, resolve(s), resolve(t)));
  });

  m.def("property_names", [] { return check::property_names(); });
  m.def(
      "run_property",
      [](const std::string& name, const std::string& profile, py::object max_size,
         py::object max_index) {
        return report_dict(check::run_property(name, make_bounds(profile, max_size, max_index)));
      },
      py::arg("name"), py::arg("profile") = "default", py::arg("max_size") = py::none(),
      py::arg("max_index") = py::none());
  m.def(
      "run_suite",
      [](const std::string& profile, py::object max_size, py::object max_index) {
        py::list out;
        for (const auto& r : check::run_suite(make_bounds(profile, max_size, max_index)))
          out.append(report_dict(r));
        return out;
      },
      py::arg("profile") = "default", py::arg("max_size") = py::none(),
      py::arg("max_index") = py::none());
  m.def(
      "audit_termination",
      [](const std::string& profile, py::object max_size, py::object max_index) {
        auto a = check::audit_termination(make_bounds(profile, max_size, max_index));
        py::dict d;
        d["audited_calls"] = a.audited_calls;
        d["violations"] = a.violations;
        bool pass = a.violations == 0;
        for (const auto& r : a.reports) pass = pass && r.pass;
        d["pass"] = pass;
        return d;
      },
      py::arg("profile") = "fast", py::arg("max_size") = py::none(),
      py::arg("max_index") = py::none());
}
