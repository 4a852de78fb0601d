#ifndef PBWGB_CLI_HH
#define PBWGB_CLI_HH

// Command driver behind the pbwgb binary. Kept as a library function so the
// test suite can run commands in-process and assert on exact output.
//
// Exit codes: 0 ok, 2 parse error, 3 validation failure, 4 step guard, 1
// anything else.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "error.hh"
#include "intersect.hh"
#include "io.hh"
#include "oracle.hh"
#include "syzygy.hh"
#include "twosided.hh"

namespace pbwgb {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace cli_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Algebra references: `name(arg)` hits the preset table, anything else is a
// file path.
inline Presentation load_algebra(const std::string& ref) {
  auto lp = ref.find('(');
  if (lp != std::string::npos && ref.back() == ')')
    return make_preset(ref.substr(0, lp), ref.substr(lp + 1, ref.size() - lp - 2));
  return parse_algebra(read_file(ref));
}

struct Options {
  std::string algebra;
  std::vector<std::string> gens;
  std::string order;
  std::string mod_order = "top";
  std::string env_order;
  std::uint64_t step_cap = 0;
  std::uint64_t rank = 0;
  std::uint64_t degree = 0;
  bool json = false;
  bool legacy = false;
  bool raw = false;
  bool assume_gb = false;
  std::string arg_a, arg_b;  // positionals
  std::string oracle_mode;
};

inline Presentation configured_algebra(const Options& o) {
  Presentation p = load_algebra(o.algebra);
  if (!o.order.empty()) p = with_order(p, parse_base_order(o.order));
  std::uint64_t cap = o.step_cap;
  if (cap == 0) {
    if (const char* envcap = std::getenv("PBWGB_STEP_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(envcap, &end, 10);
      if (end == envcap || *end != '\0' || v == 0)
        throw validation_error("PBWGB_STEP_CAP must be a positive integer");
      cap = v;
    }
  }
  if (cap != 0) p.set_step_cap(cap);
  auto issues = p.validate();
  if (!issues.empty()) {
    std::string msg = "invalid presentation";
    for (const auto& s : issues) msg += "\n  " + s;
    throw validation_error(msg);
  }
  return p;
}

inline std::vector<Vec> load_family(const Options& o, const std::string& path,
                                    const Presentation& p) {
  std::vector<Vec> f = parse_vectors(read_file(path), p);
  if (f.empty()) throw validation_error("no generators in '" + path + "'");
  if (o.rank != 0 && f.front().size() != o.rank)
    throw validation_error("generators in '" + path + "' have rank " +
                           std::to_string(f.front().size()) + ", expected " +
                           std::to_string(o.rank));
  return f;
}

inline ModOrder module_order(const Options& o, const Presentation& p) {
  return ModOrder{parse_mod_kind(o.mod_order), p.order()};
}

inline EnvKind env_kind(const Options& o) {
  if (!o.env_order.empty()) return parse_env_kind(o.env_order);
  return parse_mod_kind(o.mod_order) == ModKind::top ? EnvKind::comp_up : EnvKind::elim_up;
}

inline void print_family(std::ostream& out, const Presentation& p, const std::vector<Vec>& f,
                         bool json, nlohmann::ordered_json* attach = nullptr) {
  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : f) arr.push_back(format_vec(p, v));
    if (attach) {
      (*attach)["basis"] = std::move(arr);
    } else {
      nlohmann::ordered_json doc;
      doc["basis"] = std::move(arr);
      out << doc.dump(2) << "\n";
    }
    return;
  }
  for (const auto& v : f) out << format_vec(p, v) << "\n";
}

inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases, syzygies and intersections over PBW algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c, bool needs_gens) {
    c->add_option("--algebra", o.algebra, "algebra file or preset name(arg)")->required();
    c->add_option("--order", o.order, "override the base order (lex | glex | wlex:w1,..,wn)");
    if (needs_gens)
      c->add_option("--gens", o.gens, "generator file, one vector per line")
          ->required()
          ->type_size(1)
          ->allow_extra_args(false);  // one file per flag; never eats positionals
    c->add_option("--mod-order", o.mod_order, "module order: top | pot");
    c->add_option("--env-order", o.env_order,
                  "enveloping order: comp-up | comp-down | elim-up | elim-down");
    c->add_option("--rank", o.rank, "expected rank of generator vectors");
    c->add_option("--step-cap", o.step_cap, "rewrite step guard (also PBWGB_STEP_CAP)");
    c->add_flag("--json", o.json, "machine-readable output");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a presentation");
  add_common(validate, false);

  CLI::App* mul = app.add_subcommand("mul", "multiply two elements");
  add_common(mul, false);
  mul->add_option("a", o.arg_a, "left factor")->required();
  mul->add_option("b", o.arg_b, "right factor")->required();

  CLI::App* nf = app.add_subcommand("nf", "left normal form against the generators as given");
  add_common(nf, true);
  nf->add_option("vector", o.arg_a, "element to reduce")->required();

  CLI::App* gbl = app.add_subcommand("gb-left", "left Groebner basis");
  add_common(gbl, true);

  CLI::App* gb2 = app.add_subcommand("gb-2s", "two-sided Groebner basis");
  add_common(gb2, true);
  gb2->add_flag("--legacy", o.legacy, "iterate left bases until right-closed");

  CLI::App* szl = app.add_subcommand("syz-left", "left syzygies of the generators");
  add_common(szl, true);

  CLI::App* sz2 = app.add_subcommand("syz-2s", "bimodule syzygies of the generators");
  add_common(sz2, true);

  CLI::App* inter = app.add_subcommand("intersect", "intersection of two or more bimodules");
  add_common(inter, false);
  inter->add_option("--gens", o.gens, "generator file per family (repeat)")
      ->required()
      ->expected(2, 64)
      ->type_size(1)
      ->allow_extra_args(false);
  inter->add_flag("--raw", o.raw, "skip the final basis pass on the intersection generators");

  CLI::App* mem = app.add_subcommand("member", "two-sided membership test");
  add_common(mem, true);
  mem->add_option("vector", o.arg_a, "element to test")->required();
  mem->add_flag("--assume-gb", o.assume_gb, "treat the generator file as a basis already");

  CLI::App* envc = app.add_subcommand("env", "print the enveloping presentation");
  add_common(envc, false);

  CLI::App* oraclec = app.add_subcommand("oracle", "degree-truncated linear-algebra checks");
  add_common(oraclec, true);
  oraclec->add_option("mode", o.oracle_mode, "member | equal")->required();
  oraclec->add_option("vector", o.arg_a, "element to test (member mode)");
  oraclec->add_option("--degree", o.degree, "truncation degree")->required();

  CLI::App* bench = app.add_subcommand("bench", "run both two-sided algorithms and compare");
  add_common(bench, true);

  {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  }

  // intersect defaults to position-over-term like the elimination it is
  if (app.got_subcommand(inter) && inter->count("--mod-order") == 0) o.mod_order = "pot";

  if (app.got_subcommand(validate)) {
    Presentation p = load_algebra(o.algebra);
    if (!o.order.empty()) p = with_order(p, parse_base_order(o.order));
    auto issues = p.validate();
    if (issues.empty()) {
      out << "ok\n";
      return 0;
    }
    for (const auto& s : issues) out << s << "\n";
    return 3;
  }

  if (app.got_subcommand(mul)) {
    Presentation p = configured_algebra(o);
    Poly r = p.mul(parse_poly(o.arg_a, p), parse_poly(o.arg_b, p));
    out << format_poly(p, r) << "\n";
    return 0;
  }

  if (app.got_subcommand(nf)) {
    Presentation p = configured_algebra(o);
    std::vector<Vec> f = load_family(o, o.gens.front(), p);
    Vec v = parse_vec(o.arg_a, p);
    if (v.size() != f.front().size()) throw validation_error("vector rank mismatch");
    NFResult r = left_normal_form(p, v, f, module_order(o, p));
    out << format_vec(p, r.rem) << "\n";
    return 0;
  }

  if (app.got_subcommand(gbl)) {
    Presentation p = configured_algebra(o);
    std::vector<Vec> f = load_family(o, o.gens.front(), p);
    ModOrder mo = module_order(o, p);
    GBResult gb = buchberger_left(p, f, mo);
    print_family(out, p, canonical_family(p, gb.basis, mo), o.json);
    return 0;
  }

  if (app.got_subcommand(gb2)) {
    Presentation p = configured_algebra(o);
    std::vector<Vec> f = load_family(o, o.gens.front(), p);
    ModOrder mo = module_order(o, p);
    TwoSidedResult r = o.legacy ? twosided_gb_legacy(p, f, mo)
                                : twosided_gb(p, f, mo, env_kind(o));
    if (o.json) {
      nlohmann::ordered_json doc;
      print_family(out, p, r.basis, true, &doc);
      doc["buchberger_calls"] = r.buchberger_calls;
      doc["outer_iterations"] = r.outer_iterations;
      doc["env_basis_size"] = r.env_basis_size;
      out << doc.dump(2) << "\n";
    } else {
      print_family(out, p, r.basis, false);
    }
    return 0;
  }

  if (app.got_subcommand(szl)) {
    Presentation p = configured_algebra(o);
    std::vector<Vec> f = load_family(o, o.gens.front(), p);
    LeftSyzygies s = left_syzygy(p, f, module_order(o, p));
    print_family(out, p, s.gens, o.json);
    return 0;
  }

  if (app.got_subcommand(sz2)) {
    Presentation p = configured_algebra(o);
    std::vector<Vec> f = load_family(o, o.gens.front(), p);
    BimoduleSyzygies s = syzygy_bimodule(p, f, module_order(o, p), env_kind(o));
    print_family(out, s.env, s.gens, o.json);
    return 0;
  }

  if (app.got_subcommand(inter)) {
    Presentation p = configured_algebra(o);
    std::vector<std::vector<Vec>> fams;
    for (const auto& path : o.gens) fams.push_back(load_family(o, path, p));
    IntersectionResult r =
        intersect_bimodules(p, fams, module_order(o, p), env_kind(o), !o.raw);
    print_family(out, p, o.raw ? r.raw : r.basis, o.json);
    return 0;
  }

  if (app.got_subcommand(mem)) {
    Presentation p = configured_algebra(o);
    std::vector<Vec> f = load_family(o, o.gens.front(), p);
    Vec v = parse_vec(o.arg_a, p);
    if (v.size() != f.front().size()) throw validation_error("vector rank mismatch");
    ModOrder mo = module_order(o, p);
    std::vector<Vec> gb = o.assume_gb ? f : twosided_gb(p, f, mo, env_kind(o)).basis;
    out << (member(p, v, gb, mo) ? "true" : "false") << "\n";
    return 0;
  }

  if (app.got_subcommand(envc)) {
    Presentation p = configured_algebra(o);
    out << format_algebra(enveloping(p, env_kind(o)));
    return 0;
  }

  if (app.got_subcommand(oraclec)) {
    Presentation p = configured_algebra(o);
    std::vector<Vec> f = load_family(o, o.gens.front(), p);
    if (o.oracle_mode == "member") {
      if (o.arg_a.empty()) throw validation_error("oracle member needs an element");
      Vec v = parse_vec(o.arg_a, p);
      if (v.size() != f.front().size()) throw validation_error("vector rank mismatch");
      TruncatedBasis tb = truncated_span(p, f, o.degree);
      out << (member_up_to_degree(tb, v) ? "true" : "false") << "\n";
      return 0;
    }
    if (o.oracle_mode == "equal") {
      if (o.gens.size() != 2) throw validation_error("oracle equal needs two --gens files");
      std::vector<Vec> g = load_family(o, o.gens[1], p);
      if (g.front().size() != f.front().size()) throw validation_error("rank mismatch");
      bool eq = equal_up_to_degree(truncated_span(p, f, o.degree),
                                   truncated_span(p, g, o.degree));
      out << (eq ? "true" : "false") << "\n";
      return 0;
    }
    throw validation_error("oracle mode must be member or equal");
  }

  if (app.got_subcommand(bench)) {
    Presentation p = configured_algebra(o);
    std::vector<Vec> f = load_family(o, o.gens.front(), p);
    ModOrder mo = module_order(o, p);
    auto clock = [] { return std::chrono::steady_clock::now(); };
    auto t0 = clock();
    TwoSidedResult nw = twosided_gb(p, f, mo, env_kind(o));
    auto t1 = clock();
    TwoSidedResult lg = twosided_gb_legacy(p, f, mo);
    auto t2 = clock();
    auto ms = [](auto a, auto b) {
      return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
    };
    bool agree = nw.basis.size() == lg.basis.size();
    for (std::size_t i = 0; agree && i < nw.basis.size(); ++i)
      agree = nw.basis[i] == lg.basis[i];
    if (o.json) {
      nlohmann::ordered_json doc;
      doc["new"] = {{"wall_ms", ms(t0, t1)},
                    {"buchberger_calls", nw.buchberger_calls},
                    {"outer_iterations", nw.outer_iterations},
                    {"basis_size", nw.basis.size()}};
      doc["legacy"] = {{"wall_ms", ms(t1, t2)},
                       {"buchberger_calls", lg.buchberger_calls},
                       {"outer_iterations", lg.outer_iterations},
                       {"basis_size", lg.basis.size()}};
      doc["bases_equal"] = agree;
      out << doc.dump(2) << "\n";
    } else {
      out << "algorithm wall_ms buchberger_calls outer_iterations basis_size\n";
      out << "new " << ms(t0, t1) << " " << nw.buchberger_calls << " " << nw.outer_iterations
          << " " << nw.basis.size() << "\n";
      out << "legacy " << ms(t1, t2) << " " << lg.buchberger_calls << " "
          << lg.outer_iterations << " " << lg.basis.size() << "\n";
      out << "bases_equal " << (agree ? "true" : "false") << "\n";
    }
    return 0;
  }

  err << "no command\n";
  return 2;
}

}  // namespace cli_detail

inline CliResult run_command(const std::vector<std::string>& args) {
  CliResult res;
  std::ostringstream out, err;
  try {
    res.exit_code = cli_detail::dispatch(args, out, err);
  } catch (const CLI::CallForHelp& e) {
    // help text is not stable output; route it to err and succeed
    err << e.what() << "\n";
    res.exit_code = 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    res.exit_code = 2;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    res.exit_code = 2;
  } catch (const validation_error& e) {
    err << "validation error: " << e.what() << "\n";
    res.exit_code = 3;
  } catch (const guard_error& e) {
    err << "guard tripped: " << e.what() << "\n";
    res.exit_code = 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    res.exit_code = 1;
  }
  res.out = out.str();
  res.err = err.str();
  return res;
}

}  // namespace pbwgb

#endif
