#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>

#include "albanese/homology.hpp"
#include "albanese/johnson.hpp"
#include "albanese/prop.hpp"
#include "albanese/schur_calculus.hpp"
#include "albanese/tensor_oracle.hpp"
#include "albanese/verification.hpp"
#include "envelope.hpp"
#include "result_cache.hpp"

namespace {

using namespace albanese;
using albanese::cli::Envelope;
using albanese::cli::Json;

enum ExitCode { kOk = 0, kInputError = 1, kVerificationFailure = 2, kCapacityExceeded = 3 };

struct GlobalOptions {
  bool no_timing = false;
  bool cache = false;
  std::string cache_dir;
  int max_degree = 5;
};

struct WOptions {
  int degree = 1;
  std::string variant = "full";
  std::optional<int> rank;
  std::string format = "json";
};

struct AutOptions {
  int p = 0;
  int q = 0;
};

struct VerifyOptions {
  std::string suite = "all";
  unsigned workers = 0;
  int max_io_degree = 4;
  int max_p = 6;
  int max_q = 3;
};

struct DimsOptions {
  std::string target = "w";
  int degree = 1;
};

struct InvariantsOptions {
  int n = 0, p = 0, q = 0;
  std::optional<int> r, s;
};

struct JohnsonOptions {
  int n = 3;
  bool span = false;
  std::string endo;
};

void check_degree(int degree, const GlobalOptions& g) {
  if (degree < 0) throw InputError("degree must be nonnegative");
  if (degree > g.max_degree) {
    throw CapacityError("degree " + std::to_string(degree) + " exceeds the configured maximum " +
                        std::to_string(g.max_degree));
  }
}

Envelope cmd_w(const WOptions& o, const GlobalOptions& g) {
  check_degree(o.degree, g);
  const Variant variant = parse_variant(o.variant);
  if (o.rank && *o.rank < 1) throw InputError("rank must be at least 1");
  Envelope e;
  const Decomposition w = albanese_w(o.degree, variant);
  const Decomposition shown = o.rank ? evaluate_at_rank(w, *o.rank) : w;
  e.result["degree"] = o.degree;
  e.result["variant"] = to_string(variant);
  e.result["term_count"] = shown.term_count();
  e.result["terms"] = cli::terms_json(shown, o.rank);
  e.result["dimension_polynomial"] = cli::polynomial_json(albanese_dim_polynomial(o.degree, variant));
  if (o.rank) {
    e.result["rank"] = *o.rank;
    e.result["total_dimension"] = cli::integer_json(shown.total_dim_at(*o.rank));
    if (*o.rank < 3 * o.degree) {
      e.warnings.push_back("rank " + std::to_string(*o.rank) + " is below the stable range n >= " +
                           std::to_string(3 * o.degree) + "; the truncated table need not be the homology");
    }
  }
  e.provenance = cli::make_provenance("traceless product of graded-symmetric powers via power-sum plethysm",
                                      3 * o.degree, false);
  return e;
}

Envelope cmd_aut(const AutOptions& o, const GlobalOptions& g) {
  if (o.p < 0 || o.q < 0) throw InputError("p and q must be nonnegative");
  if (o.p > 12 || o.q > 12) throw CapacityError("p and q are capped at 12");
  Envelope e;
  const AutCohomology aut = stable_aut_cohomology_dim(o.p, o.q);
  e.result["p"] = o.p;
  e.result["q"] = o.q;
  e.result["degree"] = aut.degree;
  e.result["dimension"] = cli::integer_json(aut.dimension);
  e.result["stable_range"] = aut.stable_range ? Json(*aut.stable_range) : Json(nullptr);
  Json routes;
  routes["prop_count"] = cli::integer_json(aut.dimension);
  bool agree = true;
  if (o.p >= o.q) {
    check_degree(o.p - o.q, g);
    const BigInt pairing = multiplicity_pairing(albanese_w(o.p - o.q), decompose_mixed_tensor(o.p, o.q));
    routes["representation_pairing"] = cli::integer_json(pairing);
    agree = pairing == aut.dimension;
  } else {
    routes["representation_pairing"] = nullptr;
  }
  e.result["routes"] = std::move(routes);
  e.result["routes_agree"] = agree;
  e.provenance = cli::make_provenance("forest-structure count and multiplicity pairing with W_{p-q}",
                                      aut.stable_range, false);
  return e;
}

Envelope cmd_verify(const VerifyOptions& o, const GlobalOptions&) {
  SuiteOptions options;
  options.workers = o.workers;
  options.io_split_max_degree = o.max_io_degree;
  options.prop_max_p = o.max_p;
  options.prop_max_q = o.max_q;
  const SuiteResult r = run_suite(o.suite, options);
  Envelope e;
  e.result["suite"] = o.suite;
  e.result["passed"] = r.passed();
  e.result["case_count"] = r.cases.size();
  Json failures = Json::array();
  for (const CaseResult& c : r.failures()) failures.push_back(Json{{"label", c.label}, {"detail", c.detail}});
  e.result["failures"] = std::move(failures);
  Json cases = Json::array();
  for (const CaseResult& c : r.cases) cases.push_back(Json{{"label", c.label}, {"passed", c.passed}});
  e.result["cases"] = std::move(cases);
  e.provenance = cli::make_provenance("acceptance sub-suites", std::nullopt, false);
  return e;
}

Envelope cmd_dims(const DimsOptions& o, const GlobalOptions& g) {
  check_degree(o.degree, g);
  Envelope e;
  e.result["target"] = o.target;
  e.result["degree"] = o.degree;
  if (o.target == "w" || o.target == "w-outer") {
    const DimensionPolynomial p = albanese_dim_polynomial(o.degree, o.target == "w" ? Variant::Full : Variant::Outer);
    e.result["polynomial"] = cli::polynomial_json(p);
    e.provenance = cli::make_provenance("Weyl dimensions interpolated over the stable range", p.valid_from, false);
  } else if (o.target == "h-conj") {
    const ConjecturalDimension c = conjectural_cohomology_dim(o.degree);
    e.result["polynomial"] = cli::polynomial_json(c.polynomial);
    e.provenance = cli::make_provenance("sum of W_k polynomials weighted by tautological monomials",
                                        c.polynomial.valid_from, c.conjectural, c.hypothesis);
  } else {
    throw InputError("target must be w, w-outer or h-conj");
  }
  return e;
}

Envelope cmd_invariants(const InvariantsOptions& o, const GlobalOptions&) {
  if (o.r.has_value() != o.s.has_value()) throw InputError("--r and --s must be given together");
  Envelope e;
  e.result["n"] = o.n;
  e.result["p"] = o.p;
  e.result["q"] = o.q;
  if (o.r) {
    e.result["r"] = *o.r;
    e.result["s"] = *o.s;
    e.result["dimension"] = cross_traceless_invariant_dim(o.n, o.p, o.q, *o.r, *o.s);
    e.provenance = cli::make_provenance("orbit sums with contraction and transvection constraints, certified kernel",
                                        std::max(o.p + o.q, *o.r + *o.s), false);
  } else {
    if (o.p < 0 || o.q < 0) throw InputError("p and q must be nonnegative");
    const ExactTensorRep rep = build_rep(o.n, o.p, o.q);
    e.result["dimension"] = invariant_dim(rep);
    e.provenance = cli::make_provenance("orbit sums with transvection constraint, certified kernel", std::nullopt, false);
  }
  return e;
}

Json tau_json(const JohnsonValue& tau) {
  Json out;
  for (int a = 1; a <= tau.rank(); ++a) {
    Json terms = Json::array();
    for (const auto& [bc, v] : tau.image(a))
      terms.push_back(Json{{"b", bc.first}, {"c", bc.second}, {"coefficient", cli::integer_json(v)}});
    out["e" + std::to_string(a)] = std::move(terms);
  }
  return out;
}

Envelope cmd_johnson(const JohnsonOptions& o, const GlobalOptions&) {
  if (!o.span && o.endo.empty()) throw InputError("johnson needs --span or --endo");
  if (o.n < 1) throw InputError("rank must be at least 1");
  if (o.n > 8) throw CapacityError("johnson rank is capped at 8");
  Envelope e;
  e.result["n"] = o.n;
  if (o.span) e.result["span_dimension"] = tau_span_dim(o.n);
  if (!o.endo.empty()) {
    const FreeEndomorphism f = FreeEndomorphism::from_json(o.endo, o.n, true);
    e.result["endomorphism"] = f.to_string();
    const bool ia = is_ia(f);
    e.result["is_ia"] = ia;
    if (!ia) throw InputError("endomorphism is not in IA_n");
    e.result["tau"] = tau_json(johnson_tau(f));
  }
  e.provenance = cli::make_provenance("free-group words and signed pair counting", std::nullopt, false);
  return e;
}

void print_tsv(const Envelope& e) {
  const bool ranked = e.result.contains("rank");
  std::cout << "lambda\tmu\tmultiplicity" << (ranked ? "\tdim_at_rank" : "") << '\n';
  for (const Json& t : e.result["terms"]) {
    std::cout << t["lambda"].get<std::string>() << '\t' << t["mu"].get<std::string>() << '\t' << t["multiplicity"].dump();
    if (ranked) std::cout << '\t' << t["dim_at_rank"].dump();
    std::cout << '\n';
  }
}

int exit_code_for(const std::string& command, const Json& result) {
  if (command == "verify" && !result.value("passed", false)) return kVerificationFailure;
  if (command == "aut" && !result.value("routes_agree", true)) return kVerificationFailure;
  return kOk;
}

int run(const std::string& command, const Json& arguments, const GlobalOptions& g, bool tsv,
        const std::function<Envelope()>& compute) {
  const auto start = std::chrono::steady_clock::now();
  Envelope e;
  std::optional<cli::ResultCache> cache;
  const std::string key = cli::ResultCache::key(command, arguments);
  if (g.cache) cache.emplace(g.cache_dir.empty() ? cli::ResultCache::default_directory() : std::filesystem::path(g.cache_dir));
  std::optional<Json> hit = cache ? cache->load(key) : std::nullopt;
  if (hit) {
    e.result = (*hit)["result"];
    e.provenance = (*hit)["provenance"];
    e.warnings = (*hit)["warnings"].get<std::vector<std::string>>();
  } else {
    e = compute();
    if (cache) cache->store(key, Json{{"result", e.result}, {"provenance", e.provenance}, {"warnings", e.warnings}});
  }
  e.query["command"] = command;
  e.query["arguments"] = arguments;
  e.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (const std::string& w : e.warnings) std::cerr << "warning: " << w << '\n';
  if (tsv)
    print_tsv(e);
  else
    std::cout << e.to_json(!g.no_timing).dump(2) << '\n';
  const int code = exit_code_for(command, e.result);
  if (code == kVerificationFailure && command == "verify") {
    int shown = 0;
    for (const Json& f : e.result["failures"]) {
      if (shown++ == 5) break;
      std::cerr << "FAIL " << f["label"].get<std::string>() << ": " << f["detail"].get<std::string>() << '\n';
    }
  }
  return code;
}

Json optional_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable Albanese homology of IA_n and IO_n: representation tables, oracles and checks"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_flag("--no-timing", g.no_timing, "Omit the timing block so identical queries diff cleanly");
  app.add_flag("--cache", g.cache, "Use the on-disk result cache");
  app.add_option("--cache-dir", g.cache_dir, "Cache directory (default $ALBANESE_CACHE_DIR or ~/.cache/albanese)");
  app.add_option("--max-degree", g.max_degree, "Largest homological degree accepted")->capture_default_str();

  WOptions w;
  auto* w_cmd = app.add_subcommand("w", "Decomposition of W_i");
  w_cmd->add_option("--degree", w.degree, "Homological degree i")->required();
  w_cmd->add_option("--variant", w.variant, "full or outer")->check(CLI::IsMember({"full", "outer"}))->capture_default_str();
  w_cmd->add_option("--rank", w.rank, "Truncate at rank n and report dimensions");
  w_cmd->add_option("--format", w.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();

  AutOptions aut;
  auto* aut_cmd = app.add_subcommand("aut", "Stable cohomology of Aut(F_n) with coefficients in H^{p,q}");
  aut_cmd->add_option("--p", aut.p, "Covariant tensor degree")->required();
  aut_cmd->add_option("--q", aut.q, "Contravariant tensor degree")->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an acceptance sub-suite");
  verify_cmd->add_option("--suite", verify.suite, "omega, prop-match, io-split, johnson, plethysm or all")
      ->check(CLI::IsMember({"omega", "prop-match", "io-split", "johnson", "plethysm", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--workers", verify.workers, "Worker threads (0 = automatic)");
  verify_cmd->add_option("--max-io-degree", verify.max_io_degree, "Largest i for io-split")->capture_default_str();
  verify_cmd->add_option("--max-p", verify.max_p, "Largest p for prop-match")->capture_default_str();
  verify_cmd->add_option("--max-q", verify.max_q, "Largest q for prop-match")->capture_default_str();

  DimsOptions dims;
  auto* dims_cmd = app.add_subcommand("dims", "Dimension polynomials");
  dims_cmd->add_option("--target", dims.target, "w, w-outer or h-conj")
      ->check(CLI::IsMember({"w", "w-outer", "h-conj"}))
      ->capture_default_str();
  dims_cmd->add_option("--degree", dims.degree, "Homological degree")->required();

  InvariantsOptions inv;
  auto* inv_cmd = app.add_subcommand("invariants", "GL(n,Z)-invariant dimensions by exact linear algebra");
  inv_cmd->add_option("--n", inv.n, "Rank")->required();
  inv_cmd->add_option("--p", inv.p, "Covariant degree")->required();
  inv_cmd->add_option("--q", inv.q, "Contravariant degree")->required();
  inv_cmd->add_option("--r", inv.r, "Second factor covariant degree (traceless product)");
  inv_cmd->add_option("--s", inv.s, "Second factor contravariant degree (traceless product)");

  JohnsonOptions johnson;
  auto* johnson_cmd = app.add_subcommand("johnson", "Johnson homomorphism computations");
  johnson_cmd->add_option("--n", johnson.n, "Rank of the free group")->required();
  johnson_cmd->add_flag("--span", johnson.span, "Rank of tau on the Magnus generators");
  johnson_cmd->add_option("--endo", johnson.endo, R"(Automorphism as JSON, e.g. {"x1": "x2 x1 x2^-1"})");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*w_cmd) {
      const Json args{{"degree", w.degree}, {"variant", w.variant}, {"rank", optional_json(w.rank)}};
      return run("w", args, g, w.format == "tsv", [&] { return cmd_w(w, g); });
    }
    if (*aut_cmd) return run("aut", Json{{"p", aut.p}, {"q", aut.q}}, g, false, [&] { return cmd_aut(aut, g); });
    if (*verify_cmd) {
      const Json args{{"suite", verify.suite},
                      {"max_io_degree", verify.max_io_degree},
                      {"max_p", verify.max_p},
                      {"max_q", verify.max_q}};
      return run("verify", args, g, false, [&] { return cmd_verify(verify, g); });
    }
    if (*dims_cmd) {
      return run("dims", Json{{"target", dims.target}, {"degree", dims.degree}}, g, false,
                 [&] { return cmd_dims(dims, g); });
    }
    if (*inv_cmd) {
      const Json args{{"n", inv.n}, {"p", inv.p}, {"q", inv.q}, {"r", optional_json(inv.r)}, {"s", optional_json(inv.s)}};
      return run("invariants", args, g, false, [&] { return cmd_invariants(inv, g); });
    }
    if (*johnson_cmd) {
      const Json args{{"n", johnson.n}, {"span", johnson.span}, {"endo", johnson.endo}};
      return run("johnson", args, g, false, [&] { return cmd_johnson(johnson, g); });
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << '\n';
    return kCapacityExceeded;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kInputError;
}
