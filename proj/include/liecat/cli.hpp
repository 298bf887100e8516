#pragma once

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "json_io.hpp"

namespace liecat::cli {

using io::json;

struct Options {
  std::string file;
  bool as_json = false;
  bool strict = false;
  int truncate = 2;
  std::string mode = "sample";
  uint64_t seed = kDefaultSeed;
  bool seed_given = false;
  std::optional<FieldTag> field;
};

namespace detail {

inline uint64_t env_seed() {
  const char* s = std::getenv("LIECAT_SEED");
  if (!s) return kDefaultSeed;
  return std::strtoull(s, nullptr, 10);
}

inline const FieldTag* field_ptr(const Options& o) { return o.field ? &*o.field : nullptr; }

struct Emitter {
  json j;
  bool as_json;
  std::vector<CheckReport> reports;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Emitter(const std::string& task, const Options& o) : as_json(o.as_json) {
    j["tool"] = "liecat";
    j["task"] = task;
    j["input"] = o.file;
  }

  void add_report(CheckReport r) {
    reports.push_back(std::move(r));
  }

  bool pass() const {
    for (const auto& r : reports)
      if (!r.pass()) return false;
    return true;
  }

  int finish(std::ostream& out) {
    bool ok = pass();
    json rl = json::array();
    for (const auto& r : reports) rl.push_back(io::report_to_json(r));
    j["reports"] = rl;
    j["pass"] = ok;
    if (as_json) {
      out << j.dump(2) << "\n";
    } else {
      for (const auto& r : reports) out << r.text();
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "reports" || it.key() == "tool" || it.key() == "pass") continue;
        if (it->is_object() || it->is_array())
          out << it.key() << ": " << it->dump() << "\n";
        else if (it->is_string())
          out << it.key() << ": " << it->get<std::string>() << "\n";
        else
          out << it.key() << ": " << it->dump() << "\n";
      }
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      out << "wall-time: " << ms << " ms\n";
      out << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
  }
};

inline json basis_names(const GradedObject& o) {
  json a = json::array();
  for (int i = 0; i < o.dim(); ++i) a.push_back(o.name(i));
  return a;
}

}  // namespace detail

inline int dispatch(const std::string& task, const Options& opts, std::ostream& out) {
  detail::Emitter em(task, opts);
  json doc = io::parse_file(opts.file);
  const FieldTag* f = detail::field_ptr(opts);

  if (task == "check-lie") {
    LieObject lo = io::load_lie(doc, "$", f);
    em.j["category"] = tag_name(lo.cat().tag);
    em.j["field"] = lo.cat().field.str();
    em.j["dimensions"] = {{"algebra", lo.dim()}};
    LieCheckOptions o;
    o.strict_alternating = opts.strict;
    em.add_report(check_lie(lo, o));
    return em.finish(out);
  }

  if (task == "check-monoid") {
    MonoidObject mo = io::load_monoid(io::detail::need(doc, "monoid", "$"), "$.monoid", f);
    em.j["field"] = mo.cat().field.str();
    em.j["dimensions"] = {{"monoid", mo.dim()}};
    em.add_report(check_monoid(mo));
    return em.finish(out);
  }

  if (task == "uea" || task == "hopf-check" || task == "primitives") {
    LieObject lo = io::load_lie(doc, "$", f);
    em.j["field"] = lo.cat().field.str();
    TruncatedUEA u = uea(lo, opts.truncate);
    em.j["truncate"] = u.bound;
    em.j["dim"] = u.dim();
    em.j["basis"] = detail::basis_names(*u.carrier());
    auto guard = u.guard();
    if (task == "uea") {
      em.j["nu"] = io::morphism_to_json(u.nu);
      em.j["multiplication"] = io::morphism_to_json(u.mon().m);
      em.j["comultiplication"] = io::morphism_to_json(u.hopf.comul);
      em.j["counit"] = io::morphism_to_json(u.hopf.counit);
      em.j["antipode"] = io::morphism_to_json(*u.hopf.antipode);
      em.add_report(check_monoid(u.mon(), &guard));
    } else if (task == "hopf-check") {
      em.add_report(check_hopf(u.hopf, &guard, true));
    } else {
      PrimitiveData p = primitives(u.hopf);
      em.j["primitive_dim"] = p.sub->dim();
      json vecs = json::array();
      for (const auto& v : p.vectors) {
        json term = json::array();
        for (int i = 0; i < u.dim(); ++i)
          if (!v[size_t(i)].is_zero())
            term.push_back(json::array({u.carrier()->name(i), v[size_t(i)].str()}));
        vecs.push_back(term);
      }
      em.j["primitives"] = vecs;
      em.add_report(check_lie(p.lie));
    }
    return em.finish(out);
  }

  if (task == "semidirect") {
    io::ActionData a = io::load_action(io::detail::need(doc, "action", "$"), "$.action", f);
    LieAction theta(a.actor, a.module.carrier, a.map);
    em.add_report(check_lie(a.actor));
    em.add_report(check_lie(a.module));
    em.add_report(check_lie_action(theta));
    EquivariantLieObject e(a.module, theta);
    em.add_report(check_equivariant(e));
    SemidirectData sd = action_to_point_data(e);
    em.j["total_dim"] = sd.point.total.dim();
    em.j["basis"] = detail::basis_names(*sd.point.total.carrier);
    em.j["bracket"] = io::morphism_to_json(sd.point.total.bracket);
    em.add_report(check_lie(sd.point.total));
    em.add_report(check_point(sd.point));
    return em.finish(out);
  }

  if (task == "split-to-action") {
    Point p = io::load_point(doc, "$", f);
    em.add_report(check_point(p));
    EquivariantLieObject w = point_to_action(p);
    KernelData ker = kernel_functor(p);
    em.j["kernel_dim"] = ker.carrier->dim();
    em.j["kernel"] = io::morphism_to_json(ker.inclusion);
    em.j["theta"] = io::morphism_to_json(w.theta.act);
    em.add_report(check_lie(w.x));
    em.add_report(check_lie_action(w.theta));
    em.add_report(check_equivariant(w));
    return em.finish(out);
  }

  if (task == "exponent") {
    LieObject base = io::load_lie(io::detail::need(doc, "base", "$"), "$.base", f);
    LieObject target = io::load_lie(io::detail::need(doc, "target", "$"), "$.target", f);
    ExponentObject e = exponent(base, target, opts.truncate);
    em.j["truncate"] = e.bound;
    em.j["enveloping_dim"] = e.u.dim();
    em.j["exponent_dim"] = e.r.x.carrier->dim();
    em.j["point_dim"] = e.point().total.dim();
    em.j["bracket"] = io::morphism_to_json(e.r.x.bracket);
    em.j["translation"] = io::morphism_to_json(e.r.theta.act);
    em.add_report(check_lie(e.r.x));
    em.add_report(check_lie_action(e.r.theta));
    em.add_report(check_equivariant(e.r, exponent_row_guard(e)));
    em.add_report(check_point(e.point()));
    return em.finish(out);
  }

  if (task == "adjoint-check") {
    Point p = io::load_point(io::detail::need(doc, "point", "$"), "$.point", f);
    LieObject target = io::load_lie(io::detail::need(doc, "target", "$"), "$.target", f);
    AdjunctionOptions ao;
    ao.bound = opts.truncate;
    ao.enumerate_f2 = opts.mode == "enumerate-f2";
    ao.seed = opts.seed;
    em.j["truncate"] = ao.bound;
    em.j["mode"] = opts.mode;
    em.j["seed"] = ao.seed;
    AdjunctionResult r = adjunction_check(p, target, ao);
    em.j["sampled"] = r.sampled;
    if (ao.enumerate_f2) {
      em.j["counts"] = {{"point_homs", r.point_hom_count}, {"lie_homs", r.lie_hom_count}};
    }
    em.add_report(std::move(r.report));
    return em.finish(out);
  }

  if (task == "enumerate-homs") {
    std::string kind = io::detail::need_string(doc, "kind", "$");
    em.j["kind"] = kind;
    std::vector<Morphism> homs;
    if (kind == "lie") {
      LieObject s = io::load_lie(io::detail::need(doc, "source", "$"), "$.source", f);
      LieObject t = io::load_lie(io::detail::need(doc, "target", "$"), "$.target", f);
      homs = enumerate_lie_homs_f2(s, t);
    } else if (kind == "monoid") {
      MonoidObject s =
          io::load_monoid(io::detail::need(doc, "source", "$"), "$.source", f);
      MonoidObject t =
          io::load_monoid(io::detail::need(doc, "target", "$"), "$.target", f);
      homs = enumerate_monoid_homs_f2(s, t);
    } else if (kind == "point") {
      Point s = io::load_point(io::detail::need(doc, "source", "$"), "$.source", f);
      Point t = io::load_point(io::detail::need(doc, "target", "$"), "$.target", f);
      homs = enumerate_point_homs_f2(s, t);
    } else {
      throw io::SchemaError("$.kind", "must be lie, monoid or point");
    }
    em.j["count"] = homs.size();
    json hl = json::array();
    for (const auto& h : homs) hl.push_back(io::morphism_to_json(h));
    em.j["homs"] = hl;
    CheckReport ok;
    ok.subject = "enumerate";
    ok.laws.push_back({"enumeration-complete", true, {}, false, ""});
    em.add_report(std::move(ok));
    return em.finish(out);
  }

  throw io::SchemaError("$", "unknown task '" + task + "'");
}

/// Entry point shared by the binary and the tests. Returns the process exit
/// code: 0 all checks passed, 1 a mathematical check failed, 2 schema or
/// usage errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"computer algebra for internal Lie algebras: enveloping monoids, "
               "semidirect products and truncated algebraic exponents"};
  app.require_subcommand(1);

  static const std::vector<std::string> tasks = {
      "check-lie", "check-monoid", "hopf-check", "uea",          "primitives",
      "semidirect", "split-to-action", "exponent", "adjoint-check", "enumerate-homs"};

  std::map<std::string, Options> opt;
  for (const auto& t : tasks) {
    auto* sub = app.add_subcommand(t);
    Options& o = opt[t];
    o.seed = detail::env_seed();
    sub->add_option("file", o.file, "JSON input file")->required();
    sub->add_flag("--json", o.as_json, "emit the machine-readable report");
    sub->add_option_function<std::string>(
        "--field",
        [&o](const std::string& s) { o.field = io::parse_field(s, "--field"); },
        "override the file's ground field (Q, F2, F<p>)");
    if (t == "check-lie") sub->add_flag("--strict", o.strict, "require b(x,x) = 0 on the diagonal");
    if (t == "uea" || t == "hopf-check" || t == "primitives" || t == "exponent" ||
        t == "adjoint-check")
      sub->add_option("--truncate", o.truncate, "word-length truncation bound")->required();
    if (t == "adjoint-check") {
      sub->add_option("--mode", o.mode, "sample or enumerate-f2")
          ->check(CLI::IsMember({"sample", "enumerate-f2"}));
      sub->add_option("--seed", o.seed, "sampling seed");
    }
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  for (const auto& t : tasks)
    if (app.get_subcommand(t)->parsed()) {
      try {
        return dispatch(t, opt[t], out);
      } catch (const io::SchemaError& e) {
        err << "schema error at " << e.path << ": " << e.what() << "\n";
        return 2;
      } catch (const TruncationError& e) {
        err << "truncation-unsound: " << e.what() << "\n";
        return 2;
      } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return 2;
      } catch (const ShapeError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
      }
    }
  err << "no task given\n";
  return 2;
}

}  // namespace liecat::cli
