#include "semicat/driver.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "semicat/crossconn.hpp"
#include "semicat/errors.hpp"
#include "semicat/fixtures.hpp"
#include "semicat/io.hpp"

namespace semicat {

namespace {

using clock_type = std::chrono::steady_clock;

struct Timer {
  RunReport& report;
  std::string name;
  clock_type::time_point start = clock_type::now();
  ~Timer() {
    auto ms = std::chrono::duration<double, std::milli>(clock_type::now()
                                                        - start)
                  .count();
    report.timings_ms.emplace_back(name, ms);
  }
};

void add(RunReport& r, std::string name, bool pass, std::string detail = "") {
  r.checks.push_back({std::move(name), pass ? "pass" : "fail",
                      std::move(detail)});
  if (!pass) {
    r.exit_code = 1;
  }
}

void info(RunReport& r, std::string name, std::string detail) {
  r.checks.push_back({std::move(name), "info", std::move(detail)});
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// Distinguishes bad input (exit 2) from property violations (exit 1).
int run_guarded(RunReport& r, std::function<void()> const& body) {
  try {
    body();
    return r.exit_code;
  } catch (ParseError const& e) {
    r.checks.push_back({"input", "fail", e.what()});
    return r.exit_code = 2;
  } catch (OutOfRangeError const& e) {
    r.checks.push_back({"input", "fail", e.what()});
    return r.exit_code = 2;
  } catch (NonAssociativeError const& e) {
    r.checks.push_back({"input", "fail", e.what()});
    return r.exit_code = 2;
  } catch (Error const& e) {
    r.checks.push_back({"run", "fail", e.what()});
    return r.exit_code = 1;
  }
}

void analyze_semigroup(RunReport& r, FiniteSemigroup const& s,
                       DriverOptions const& opts, std::string const& name) {
  Timer t{r, name.empty() ? "analyze" : name};
  std::string prefix = name.empty() ? "" : name + ": ";
  auto inv = idempotents_and_inverses(s);
  info(r, prefix + "order", std::to_string(s.order));
  info(r, prefix + "idempotents", std::to_string(inv.idempotents.size()));
  info(r, prefix + "regular", yesno(inv.is_regular));
  auto vi = is_inverse(s);
  for (auto const& [cond, ok] : vi.cross_checks) {
    info(r, prefix + "inverse / " + cond, yesno(ok));
  }
  std::string w;
  if (!vi.value && !vi.witness.empty()) {
    w = " witness (";
    for (size_t i = 0; i < vi.witness.size(); ++i) {
      w += (i ? ", " : "") + s.label(vi.witness[i]);
    }
    w += ")";
  }
  info(r, prefix + "inverse", yesno(vi.value) + w);
  auto vl = is_locally_inverse(s);
  for (auto const& [cond, ok] : vl.cross_checks) {
    info(r, prefix + "locally inverse / " + cond, yesno(ok));
  }
  w.clear();
  if (!vl.value && !vl.witness.empty()) {
    w = " witness (";
    for (size_t i = 0; i < vl.witness.size(); ++i) {
      w += (i ? ", " : "") + s.label(vl.witness[i]);
    }
    w += ")";
  }
  info(r, prefix + "locally inverse", yesno(vl.value) + w);
  if (inv.is_regular) {
    auto L = left_ideal_category(s);
    auto R = right_ideal_category(s);
    info(r, prefix + "left ideal category",
         std::to_string(L.cat.num_objects) + " objects, "
             + std::to_string(L.cat.num_morphisms()) + " morphisms");
    info(r, prefix + "right ideal category",
         std::to_string(R.cat.num_objects) + " objects, "
             + std::to_string(R.cat.num_morphisms()) + " morphisms");
    auto rep = classify_category(L.cat, opts.max_enum);
    std::string verdict = rep.unambiguous() ? "unambiguous"
                          : rep.normal()    ? "normal"
                                            : "neither";
    info(r, prefix + "left ideal category verdict", verdict);
    add(r, prefix + "unambiguous iff locally inverse",
        rep.unambiguous() == vl.value);
  }
}

void analyze_socat(RunReport& r, SOCategory const& C,
                   DriverOptions const& opts) {
  Timer t{r, "analyze"};
  info(r, "objects", std::to_string(C.num_objects));
  info(r, "morphisms", std::to_string(C.num_morphisms()));
  auto sub = verify_subobject_structure(C);
  info(r, "subobject axioms", yesno(sub.axioms_ok));
  info(r, "object order semilattice", yesno(sub.is_semilattice));
  auto rep = classify_category(C, opts.max_enum);
  info(r, "inclusions split", yesno(rep.all_inclusions_split));
  info(r, "splittings unique", yesno(rep.splits_unique));
  info(r, "normal factorisations exist", yesno(rep.all_factorable));
  info(r, "normal factorisations unique", yesno(rep.factorisations_unique));
  info(r, "identity cones", yesno(rep.has_identity_cones));
  std::string verdict = rep.unambiguous() ? "unambiguous"
                        : rep.normal()    ? "normal"
                                          : "neither";
  info(r, "verdict", verdict);
}

}  // namespace

nlohmann::json report_to_json(RunReport const& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["input"] = r.input;
  j["digest"] = r.digest;
  j["checks"] = nlohmann::json::array();
  for (auto const& c : r.checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"verdict", c.verdict}, {"detail", c.detail}});
  }
  j["timings_ms"] = nlohmann::json::array();
  for (auto const& [name, ms] : r.timings_ms) {
    j["timings_ms"].push_back({{"name", name}, {"ms", ms}});
  }
  j["exit_code"] = r.exit_code;
  j["extra"] = r.extra;
  return j;
}

RunReport report_from_json(nlohmann::json const& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.input = j.at("input").get<std::string>();
  r.digest = j.at("digest").get<std::string>();
  for (auto const& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(),
                        c.at("verdict").get<std::string>(),
                        c.at("detail").get<std::string>()});
  }
  for (auto const& t : j.at("timings_ms")) {
    r.timings_ms.emplace_back(t.at("name").get<std::string>(),
                              t.at("ms").get<double>());
  }
  r.exit_code = j.at("exit_code").get<int>();
  r.extra = j.at("extra");
  return r;
}

std::string format_report_text(RunReport const& r) {
  std::ostringstream out;
  out << "== " << r.command;
  if (!r.input.empty()) {
    out << " " << r.input;
  }
  out << " ==\n";
  for (auto const& c : r.checks) {
    out << "  [" << c.verdict << "] " << c.name;
    if (!c.detail.empty()) {
      out << ": " << c.detail;
    }
    out << "\n";
  }
  if (r.extra.contains("groupoid")) {
    out << r.extra["groupoid"].get<std::string>();
  }
  out << "exit " << r.exit_code << "\n";
  return out.str();
}

RunReport cmd_analyze(std::string const& path, DriverOptions const& opts) {
  RunReport r;
  r.command = "analyze";
  r.input = path;
  run_guarded(r, [&] {
    auto text = read_file(path);
    r.digest = fnv1a_digest(text);
    if (opts.format == "socat") {
      analyze_socat(r, parse_socat(text), opts);
    } else {
      analyze_semigroup(r, parse_cayley(text), opts, "");
    }
  });
  return r;
}

RunReport cmd_rebuild(std::string const& path, DriverOptions const& opts) {
  RunReport r;
  r.command = "rebuild";
  r.input = path;
  run_guarded(r, [&] {
    auto text = read_file(path);
    r.digest = fnv1a_digest(text);
    auto s = parse_cayley(text);
    Timer t{r, "rebuild"};
    auto rep = rebuild_check(s, opts.max_enum);
    info(r, "e_omega", std::to_string(rep.e_omega_size));
    info(r, "s_omega order", std::to_string(rep.s_omega_size));
    add(r, "isomorphic to the input", rep.iso_found);
    add(r, "left ideal categories isomorphic", rep.left_category_iso);
    add(r, "right ideal categories isomorphic", rep.right_category_iso);
    add(r, "idempotents form a pseudo-semilattice", rep.pseudo_semilattice);
    r.extra["fixture"] = path;
    r.extra["e_omega"] = rep.e_omega_size;
    r.extra["s_omega"] = rep.s_omega_size;
    r.extra["iso_found"] = rep.iso_found;
    if (rep.iso_found) {
      nlohmann::json w = nlohmann::json::array();
      for (size_t i = 0; i < rep.iso.size(); ++i) {
        w.push_back(rep.iso[i]);
      }
      r.extra["witness"] = w;
    } else {
      nlohmann::json w = nlohmann::json::array();
      for (auto const& fw : rep.witnesses) {
        w.push_back(fw.check);
      }
      r.extra["witness"] = w;
    }
  });
  return r;
}

RunReport cmd_rees(std::string const& path, DriverOptions const& opts) {
  RunReport r;
  r.command = "rees";
  r.input = path;
  run_guarded(r, [&] {
    auto text = read_file(path);
    r.digest = fnv1a_digest(text);
    auto spec = parse_rees_spec(text);
    auto reg = check_matrix_regular(spec.matrix);
    add(r, "sandwich matrix regular", reg.regular,
        reg.regular ? ""
                    : std::string(reg.witness_is_row ? "row " : "column ")
                          + std::to_string(reg.witness_index));
    if (!reg.regular) {
      return;
    }
    Timer t{r, "rees"};
    auto cone = rees_cone_iso(spec, opts.max_enum);
    info(r, "cone semigroup order", std::to_string(cone.cone_count));
    add(r, "cone count matches the wreath formula", cone.count_matches,
        std::to_string(cone.cone_count) + " = "
            + std::to_string(cone.expected_count));
    add(r, "isomorphic to the wreath quotient", cone.iso_found);
    add(r, "structural tuple map is an isomorphism", cone.structural_map_iso);
    add(r, "principal cones are translated columns",
        cone.principal_cones_match);
    add(r, "R-classes are tuple orbits", cone.rclass_orbits_match);
    add(r, "dual object count matches tuple orbits",
        cone.dual_object_count_matches);
    auto mx = matrix_cxn(spec, opts.max_enum);
    add(r, "Gamma objects are matrix columns", mx.gamma_objects_match);
    add(r, "Delta objects are matrix rows", mx.delta_objects_match);
    add(r, "Gamma morphisms act by column translation",
        mx.gamma_morphisms_match);
    add(r, "Delta morphisms act by row translation", mx.delta_morphisms_match);
    add(r, "cross-connection semigroup rebuilds the input", mx.rebuild_ok);
  });
  return r;
}

RunReport cmd_esn(std::string const& path, DriverOptions const& opts) {
  RunReport r;
  r.command = "esn";
  r.input = path;
  run_guarded(r, [&] {
    auto text = read_file(path);
    r.digest = fnv1a_digest(text);
    auto s = parse_cayley(text);
    Timer t{r, "esn"};
    auto G = inductive_groupoid_of(s);
    info(r, "groupoid objects", std::to_string(G.num_objects));
    info(r, "groupoid arrows", std::to_string(G.num_arrows()));
    r.extra["groupoid"] = serialize_groupoid(G);
    auto rho = rho_iso_check(s, opts.max_enum);
    info(r, "inversive cones", std::to_string(rho.c_tilde_order)
                                   + " of " + std::to_string(rho.c_hat_order)
                                   + " normal cones");
    add(r, "principal cone map is an isomorphism", rho.ok);
    auto CG = groupoid_to_category(G);
    auto GC = category_to_groupoid(CG.cat);
    add(r, "groupoid round trip",
        find_groupoid_isomorphism(G, GC).has_value());
    auto L = left_ideal_category(s);
    auto GL = category_to_groupoid(L.cat);
    auto CGL = groupoid_to_category(GL);
    add(r, "category round trip",
        find_category_isomorphism(L.cat, CGL.cat).has_value());
    add(r, "groupoid of the input matches its left ideal category",
        find_groupoid_isomorphism(G, GL).has_value());
  });
  return r;
}

RunReport cmd_fixtures(DriverOptions const& opts) {
  RunReport r;
  r.command = "fixtures";
  run_guarded(r, [&] {
    for (auto const& f : fixtures::corpus()) {
      analyze_semigroup(r, f.sg, opts, f.name);
    }
  });
  return r;
}

RunReport cmd_rees_random(int count, DriverOptions const& opts) {
  RunReport r;
  r.command = "rees-random";
  r.input = "seed=" + std::to_string(opts.seed);
  run_guarded(r, [&] {
    std::mt19937_64 rng(opts.seed);
    std::vector<FiniteSemigroup> groups = {fixtures::trivial(),
                                           fixtures::z2()};
    for (int run = 0; run < count; ++run) {
      auto const& g = groups[rng() % groups.size()];
      int i_size = 1 + static_cast<int>(rng() % 2);
      int l_size = 1 + static_cast<int>(rng() % 2);
      std::vector<std::vector<int>> matrix(l_size, std::vector<int>(i_size));
      while (true) {
        for (auto& row : matrix) {
          for (auto& v : row) {
            v = static_cast<int>(rng() % (g.order + 1)) - 1;
          }
        }
        if (check_matrix_regular(matrix).regular) {
          break;
        }
      }
      auto spec = make_rees_spec(g, i_size, l_size, matrix);
      auto cone = rees_cone_iso(spec, opts.max_enum);
      auto mx = matrix_cxn(spec, opts.max_enum);
      add(r, "random spec " + std::to_string(run), cone.ok && mx.ok,
          "|G|=" + std::to_string(g.order) + " I=" + std::to_string(i_size)
              + " L=" + std::to_string(l_size));
    }
  });
  return r;
}

}  // namespace semicat
