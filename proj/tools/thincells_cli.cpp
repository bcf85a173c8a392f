// Command-line front end: cell classification, witnesses, count tables,
// enumeration, Pluecker coordinates, and a self-check harness that replays
// the closed formulas against independent sweeps.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thincells/json_io.hpp"
#include "thincells/thincells.hpp"

namespace {

using namespace thincells;

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InvalidParameter("cannot open " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

// ---- verify suites ------------------------------------------------------
// Each suite returns a failure description, or nothing on success. The
// sampled suites draw from their own generator so suite order and sample
// counts never shift one another.

std::optional<std::string> verify_global_counts(int max_n) {
  for (int n = 3; n <= max_n; ++n) {
    const CountRecord f = count_global(n);
    const CountRecord b = brute_force_counts(n);
    if (f.complete != b.complete || f.proper != b.proper || f.empty != b.empty ||
        f.total != b.total)
      return "mismatch at n=" + std::to_string(n) + ": formula (" + f.complete.str() + ", " +
             f.proper.str() + ", " + f.empty.str() + ", " + f.total.str() + ") sweep (" +
             b.complete.str() + ", " + b.proper.str() + ", " + b.empty.str() + ", " +
             b.total.str() + ")";
    if (f.complete + f.proper + f.empty != f.total)
      return "classes do not sum to the total at n=" + std::to_string(n);
  }
  return std::nullopt;
}

std::optional<std::string> verify_restricted_counts(int max_n, bool inject_fault) {
  for (int n = 3; n <= std::min(max_n, 8); ++n) {
    const auto sweep = brute_force_restricted(n);
    Integer sum_c = 0, sum_p = 0, sum_e = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        RestrictedCounts f = count_restricted(n, i, j);
        if (inject_fault && n == 3 && i == 1 && j == 1) f.c += 1;
        const RestrictedCounts& b =
            sweep[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (f.c != b.c || f.p != b.p || f.e != b.e)
          return "mismatch at n=" + std::to_string(n) + " i=" + std::to_string(i) +
                 " j=" + std::to_string(j) + ": formula (" + f.c.str() + ", " + f.p.str() +
                 ", " + f.e.str() + ") sweep (" + b.c.str() + ", " + b.p.str() + ", " +
                 b.e.str() + ")";
        sum_c += f.c;
        sum_p += f.p;
        sum_e += f.e;
      }
    const CountRecord g = count_global(n);
    if (sum_c != g.complete || sum_p != g.proper || sum_e != g.empty)
      return "table does not sum to the global counts at n=" + std::to_string(n);
  }
  return std::nullopt;
}

std::optional<std::string> verify_zone_table(int max_n) {
  for (int n = 3; n <= std::min(max_n, 8); ++n) {
    const ZoneTable table = zone_table(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const ZoneCell& cell =
            table.grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        const RestrictedCounts g = count_restricted(n, i, j);
        const std::string where = " at n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                  " j=" + std::to_string(j);
        if (cell.zone != zone(n, i, j)) return "zone label mismatch" + where;
        if (cell.complete && *cell.complete != g.c) return "displayed complete count wrong" + where;
        if (cell.proper && *cell.proper != g.p) return "displayed proper count wrong" + where;
        if (cell.empty && *cell.empty != g.e) return "displayed empty count wrong" + where;
        if (!cell.complete && g.c != 0) return "hidden complete count non-zero" + where;
        if (!cell.proper && g.p != 0) return "hidden proper count non-zero" + where;
        if (!cell.empty && g.e != 0) return "hidden empty count non-zero" + where;
        if (cell.zone == 3 && *cell.empty != n) return "corner count is not n" + where;
        if (cell.zone == 4 &&
            *cell.proper != binomial(n, i) * binomial(n, j) - *cell.empty)
          return "band renderings disagree" + where;
      }
  }
  return std::nullopt;
}

std::optional<std::string> verify_sn_equivariance(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 4);
  for (int s = 0; s < samples; ++s) {
    const int n = static_cast<int>(uniform_int(rng, 2, 6));
    const int d = static_cast<int>(uniform_int(rng, 1, std::min(3, n)));
    const RationalMatrix w = random_full_rank_matrix(rng, d, n);
    const Permutation sigma = random_permutation(rng, n);
    const PluckerVector lhs = plucker_vector(act_sn_subspace(sigma, w));
    const PluckerVector rhs = act_sn_plucker(sigma, plucker_vector(w));
    if (!(lhs == rhs))
      return "permutation action does not commute with coordinates at sample " +
             std::to_string(s) + " (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
    const Permutation tau = random_permutation(rng, n);
    const auto subsets = enumerate_subsets(n, d);
    const Subset I = subsets[static_cast<std::size_t>(
        uniform_int(rng, 0, static_cast<std::int64_t>(subsets.size()) - 1))];
    if (inversion_sign(sigma * tau, I) !=
        inversion_sign(sigma, apply_permutation_to_subset(tau, I)) * inversion_sign(tau, I))
      return "sign cocycle fails at sample " + std::to_string(s) + " on " + I.to_string();
  }
  return std::nullopt;
}

std::optional<std::string> verify_torus_equivariance(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 5);
  for (int s = 0; s < samples; ++s) {
    const int n = static_cast<int>(uniform_int(rng, 2, 6));
    const int d = static_cast<int>(uniform_int(rng, 1, std::min(3, n)));
    const RationalMatrix w = random_full_rank_matrix(rng, d, n);
    const DiagonalTorusElement g = random_torus_element(rng, n);
    const PluckerVector lhs = plucker_vector(act_torus_subspace(w, g));
    const PluckerVector rhs = act_torus_plucker(plucker_vector(w), g);
    if (!(lhs == rhs))
      return "torus action does not commute with coordinates at sample " + std::to_string(s) +
             " (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
  }
  return std::nullopt;
}

std::optional<std::string> verify_realized_matroids(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 6);
  for (int s = 0; s < samples; ++s) {
    const int n = static_cast<int>(uniform_int(rng, 3, 6));
    try {
      if (s % 2 == 0) {
        const int d = static_cast<int>(uniform_int(rng, 1, n - 1));
        matroid_of_subspace(random_full_rank_matrix(rng, d, n));
      } else {
        const int d1 = static_cast<int>(uniform_int(rng, 1, n - 2));
        const int d2 = static_cast<int>(uniform_int(rng, d1 + 1, n - 1));
        plurimatroid_of_flag(random_flag(n, {d1, d2}, rng()));
      }
    } catch (const ExchangeViolation& e) {
      return "realized family violates exchange at sample " + std::to_string(s) + ": " + e.what();
    }
  }
  return std::nullopt;
}

std::optional<std::string> verify_incidence(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 7);
  for (int s = 0; s < samples; ++s) {
    const int n = static_cast<int>(uniform_int(rng, 3, 7));
    const RationalMatrix w2 = random_full_rank_matrix(rng, static_cast<std::size_t>(n - 1),
                                                      static_cast<std::size_t>(n));
    const std::vector<Rational> alpha = hyperplane_coordinates(w2);
    RationalMatrix vmat(1, static_cast<std::size_t>(n));
    if (s % 2 == 0) {
      vmat = random_matrix(rng, 1, static_cast<std::size_t>(n));
    } else {
      for (std::size_t r = 0; r < w2.rows(); ++r) {
        const Rational c(uniform_int(rng, -3, 3));
        for (std::size_t col = 0; col < w2.cols(); ++col) vmat.at(0, col) += c * w2.at(r, col);
      }
    }
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(n));
    for (std::size_t col = 0; col < static_cast<std::size_t>(n); ++col)
      v.push_back(vmat.at(0, col));
    const bool zero_pairing = incidence_pairing(v, alpha) == 0;
    const bool inside = rank(stack_rows(vmat, w2)) == static_cast<std::size_t>(n - 1);
    if (zero_pairing != inside)
      return "pairing and containment disagree at sample " + std::to_string(s) +
             " (n=" + std::to_string(n) + ")";
  }
  return std::nullopt;
}

std::optional<std::string> verify_witness_roundtrip(int max_n) {
  for (int n = 3; n <= std::min(max_n, 6); ++n) {
    const std::uint64_t top = std::uint64_t{1} << n;
    for (std::uint64_t a = 1; a < top; ++a)
      for (std::uint64_t b = 1; b < top; ++b) {
        const Subset k1(n, a), k2(n, b);
        if (std::popcount(a & b) == 1) {
          bool threw = false;
          try {
            witness_flag(k1, k2, n);
          } catch (const EmptyCell&) {
            threw = true;
          }
          if (!threw)
            return "witness produced for the empty cell K1=" + k1.to_string() +
                   " K2=" + k2.to_string() + " at n=" + std::to_string(n);
        } else {
          const Flag f = witness_flag(k1, k2, n);
          const KPair back = k_sets(plurimatroid_of_flag(f));
          if (back.k1 != k1 || back.k2 != k2)
            return "witness lands in the wrong cell for K1=" + k1.to_string() +
                   " K2=" + k2.to_string() + " at n=" + std::to_string(n);
        }
      }
  }
  return std::nullopt;
}

std::optional<std::string> verify_stabilizer_rank(int max_n) {
  for (int n = 3; n <= std::min(max_n, 6); ++n) {
    const std::uint64_t top = std::uint64_t{1} << n;
    for (std::uint64_t a = 1; a < top; ++a)
      for (std::uint64_t b = 1; b < top; ++b) {
        const KPair kp = make_k_pair(n, Subset(n, a), Subset(n, b));
        const Plurimatroid pm = plurimatroid_of_k_pair(kp);
        const int r = lattice_rank(character_lattice(pm));
        const int i = std::popcount(a), j = std::popcount(b);
        const int meet = std::popcount(a & b);
        const int expected = (i - 1) + (j - 1) - std::max(meet - 1, 0);
        const std::string where = " for K1=" + kp.k1.to_string() + " K2=" + kp.k2.to_string() +
                                  " at n=" + std::to_string(n);
        if (r != expected)
          return "lattice rank " + std::to_string(r) + " differs from closed form " +
                 std::to_string(expected) + where;
        const auto dims = stabilizer_dimensions(pm);
        if (dims.first != n - r || dims.second != r) return "stabilizer split wrong" + where;
      }
  }
  return std::nullopt;
}

std::optional<std::string> verify_decomposition(int samples, std::uint64_t seed) {
  const std::vector<Plurimatroid> cells = enumerate_plurimatroids(3, {1, 2});
  if (cells.size() != 49)
    return "expected 49 cells over the three-element ground set, got " +
           std::to_string(cells.size());
  std::mt19937_64 rng(seed + 10);
  const int flags = std::min(samples, 500);
  for (int s = 0; s < flags; ++s) {
    const Flag f = random_flag(3, {1, 2}, rng());
    int hits = 0;
    for (const Plurimatroid& cell : cells)
      if (cell_membership(f, cell)) ++hits;
    if (hits != 1)
      return "flag lies in " + std::to_string(hits) + " cells at sample " + std::to_string(s);
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matroid decomposition of two-step flag manifolds"};
  app.require_subcommand(1);

  std::string output_path;
  app.add_option("--output", output_path, "write the result to this file instead of stdout");

  int exit_status = 0;
  const auto emit = [&output_path](const std::string& payload) {
    if (output_path.empty()) {
      std::cout << payload;
      return;
    }
    std::ofstream file(output_path);
    if (!file) throw InvalidParameter("cannot open " + output_path);
    file << payload;
  };

  // counts
  auto* counts_cmd = app.add_subcommand("counts", "global cell counts for a ground set size");
  int counts_n = 0;
  std::string counts_format = "table";
  counts_cmd->add_option("--n", counts_n, "ground set size")->required();
  counts_cmd->add_option("--format", counts_format, "table, json, or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  counts_cmd->callback([&] {
    const CountRecord rec = count_global(counts_n);
    if (counts_format == "json") {
      emit(nlohmann::json(rec).dump(2) + "\n");
    } else if (counts_format == "csv") {
      emit("n,complete,proper,empty,total\n" + std::to_string(rec.n) + "," + rec.complete.str() +
           "," + rec.proper.str() + "," + rec.empty.str() + "," + rec.total.str() + "\n");
    } else {
      std::ostringstream out;
      out << "# COMPLETE CELLS = " << rec.complete.str() << '\n';
      out << "# PROPER CELLS = " << rec.proper.str() << '\n';
      out << "# EMPTY CELLS = " << rec.empty.str() << '\n';
      out << "# POSSIBLE CELLS = " << rec.total.str() << '\n';
      emit(out.str());
    }
  });

  // table
  auto* table_cmd = app.add_subcommand("table", "counts split by support sizes, with zones");
  int table_n = 0;
  std::string table_format = "table";
  table_cmd->add_option("--n", table_n, "ground set size")->required();
  table_cmd->add_option("--format", table_format, "table, json, or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  table_cmd->callback([&] {
    const ZoneTable table = zone_table(table_n);
    if (table_format == "json")
      emit(nlohmann::json(table).dump(2) + "\n");
    else if (table_format == "csv")
      emit(render_csv(table));
    else
      emit(render_ascii(table));
  });

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "classify a cell given its supports or a flag");
  int classify_n = 0;
  std::vector<int> classify_k1, classify_k2;
  std::string classify_input;
  classify_cmd->add_option("--n", classify_n, "ground set size (with --k1/--k2)");
  classify_cmd->add_option("--k1", classify_k1, "line support, comma separated")->delimiter(',');
  classify_cmd->add_option("--k2", classify_k2, "hyperplane support, comma separated")
      ->delimiter(',');
  classify_cmd->add_option("input", classify_input, "flag JSON file, or - for stdin");
  classify_cmd->callback([&] {
    KPair kp = [&] {
      if (!classify_k1.empty() || !classify_k2.empty()) {
        if (!classify_input.empty())
          throw CLI::ValidationError("classify", "give either --k1/--k2 or a flag, not both");
        if (classify_n == 0 || classify_k1.empty() || classify_k2.empty())
          throw CLI::ValidationError("classify", "--n, --k1, and --k2 go together");
        return make_k_pair(classify_n, Subset::of(classify_n, classify_k1),
                           Subset::of(classify_n, classify_k2));
      }
      if (classify_input.empty())
        throw CLI::ValidationError("classify", "needs --k1/--k2 or a flag JSON input");
      const Flag f = nlohmann::json::parse(read_input(classify_input)).get<Flag>();
      return k_sets(plurimatroid_of_flag(f));
    }();
    const CellClass cls = classify(kp);
    nlohmann::json out{{"n", kp.n}, {"k1", kp.k1}, {"k2", kp.k2}, {"class", cls}};
    if (cls != CellClass::Empty) out["dim"] = dimension(kp);
    const auto dims = stabilizer_dimensions(plurimatroid_of_k_pair(kp));
    out["stab_dim"] = dims.first;
    out["torus_dim"] = dims.second;
    emit(out.dump(2) + "\n");
  });

  // witness
  auto* witness_cmd = app.add_subcommand("witness", "construct a flag lying in a named cell");
  int witness_n = 0;
  std::vector<int> witness_k1, witness_k2;
  witness_cmd->add_option("--n", witness_n, "ground set size")->required();
  witness_cmd->add_option("--k1", witness_k1, "line support, comma separated")
      ->delimiter(',')
      ->required();
  witness_cmd->add_option("--k2", witness_k2, "hyperplane support, comma separated")
      ->delimiter(',')
      ->required();
  witness_cmd->callback([&] {
    const Flag f = witness_flag(Subset::of(witness_n, witness_k1),
                                Subset::of(witness_n, witness_k2), witness_n);
    emit(nlohmann::json(f).dump(2) + "\n");
  });

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "list matroids or plurimatroids as NDJSON");
  int enum_n = 0, enum_d = -1;
  std::vector<int> enum_dims;
  bool enum_orbits = false;
  unsigned enum_workers = 0;
  enum_cmd->add_option("--n", enum_n, "ground set size")->required();
  auto* enum_d_opt = enum_cmd->add_option("--d", enum_d, "single rank");
  enum_cmd->add_option("--dims", enum_dims, "rank signature, comma separated")
      ->delimiter(',')
      ->excludes(enum_d_opt);
  enum_cmd->add_flag("--orbits", enum_orbits, "collapse to symmetry classes (with --dims)");
  enum_cmd->add_option("--workers", enum_workers, "threads for the sweep (0 picks one)");
  enum_cmd->callback([&] {
    std::ostringstream out;
    if (enum_d >= 0) {
      if (enum_orbits) throw CLI::ValidationError("enumerate", "--orbits requires --dims");
      for (const Matroid& m : enumerate_matroids(enum_n, enum_d, enum_workers))
        out << nlohmann::json(m).dump() << '\n';
    } else if (!enum_dims.empty()) {
      const auto all = enumerate_plurimatroids(enum_n, enum_dims, enum_workers);
      if (enum_orbits) {
        for (const Plurimatroid& rep : orbit_representatives(all))
          out << nlohmann::json{{"representative", rep}, {"orbit_size", orbit_size(rep)}}.dump()
              << '\n';
      } else {
        for (const Plurimatroid& m : all) out << nlohmann::json(m).dump() << '\n';
      }
    } else {
      throw CLI::ValidationError("enumerate", "needs --d or --dims");
    }
    emit(out.str());
  });

  // plucker
  auto* plucker_cmd =
      app.add_subcommand("plucker", "coordinates and matroid of a subspace matrix");
  std::string plucker_input;
  plucker_cmd->add_option("input", plucker_input, "matrix JSON file, or - for stdin")->required();
  plucker_cmd->callback([&] {
    const RationalMatrix w =
        nlohmann::json::parse(read_input(plucker_input)).get<RationalMatrix>();
    nlohmann::json out = plucker_vector(w);
    out["matroid"] = matroid_of_subspace(w);
    emit(out.dump(2) + "\n");
  });

  // stabilizer
  auto* stab_cmd = app.add_subcommand("stabilizer", "torus stabilizer split of a plurimatroid");
  std::string stab_input;
  stab_cmd->add_option("input", stab_input, "plurimatroid JSON file, or - for stdin")->required();
  stab_cmd->callback([&] {
    const Plurimatroid m = nlohmann::json::parse(read_input(stab_input)).get<Plurimatroid>();
    const auto dims = stabilizer_dimensions(m);
    emit(nlohmann::json{{"n", m.n()}, {"stab_dim", dims.first}, {"torus_dim", dims.second}}
             .dump(2) +
         "\n");
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "replay the formulas against sweeps");
  int verify_max_n = 6, verify_samples = 500;
  std::uint64_t verify_seed = 42;
  bool verify_inject = false;
  verify_cmd->add_option("--max-n", verify_max_n, "largest ground set for the sweeps")
      ->check(CLI::Range(3, 10));
  verify_cmd->add_option("--samples", verify_samples, "draws per randomized suite")
      ->check(CLI::Range(1, 1000000));
  verify_cmd->add_option("--seed", verify_seed, "generator seed");
  verify_cmd->add_flag("--inject-count-fault", verify_inject, "")->group("");
  verify_cmd->callback([&] {
    std::ostringstream out;
    bool failed = false;
    const auto run = [&](const char* name, const std::string& scope,
                         const std::function<std::optional<std::string>()>& suite) {
      if (failed) return;
      const std::optional<std::string> err = suite();
      if (err) {
        out << "[FAIL] " << name << "  " << *err << '\n';
        failed = true;
        return;
      }
      out << "[ ok ] " << name;
      for (std::size_t k = std::strlen(name); k < 20; ++k) out << ' ';
      out << scope << '\n';
    };
    const std::string span_full = "n=3.." + std::to_string(verify_max_n);
    const std::string span_mid = "n=3.." + std::to_string(std::min(verify_max_n, 8));
    const std::string span_low = "n=3.." + std::to_string(std::min(verify_max_n, 6));
    const std::string sampled = std::to_string(verify_samples) + " samples";
    run("global-counts", span_full, [&] { return verify_global_counts(verify_max_n); });
    run("restricted-counts", span_mid,
        [&] { return verify_restricted_counts(verify_max_n, verify_inject); });
    run("zone-table", span_mid, [&] { return verify_zone_table(verify_max_n); });
    run("sn-equivariance", sampled,
        [&] { return verify_sn_equivariance(verify_samples, verify_seed); });
    run("torus-equivariance", sampled,
        [&] { return verify_torus_equivariance(verify_samples, verify_seed); });
    run("realized-matroids", sampled,
        [&] { return verify_realized_matroids(verify_samples, verify_seed); });
    run("incidence", sampled, [&] { return verify_incidence(verify_samples, verify_seed); });
    run("witness-roundtrip", span_low, [&] { return verify_witness_roundtrip(verify_max_n); });
    run("stabilizer-rank", span_low, [&] { return verify_stabilizer_rank(verify_max_n); });
    run("decomposition",
        "49 cells, " + std::to_string(std::min(verify_samples, 500)) + " flags",
        [&] { return verify_decomposition(verify_samples, verify_seed); });
    out << (failed ? "verify: FAIL\n" : "verify: PASS (10 suites)\n");
    emit(out.str());
    if (failed) exit_status = 1;
  });

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const EmptyCell& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_status;
}
