#include "albanese/verification.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "albanese/combinatorics.hpp"
#include "albanese/homology.hpp"
#include "albanese/johnson.hpp"
#include "albanese/prop.hpp"
#include "albanese/schur_calculus.hpp"
#include "albanese/tensor_oracle.hpp"

namespace albanese {

bool SuiteResult::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
}

std::vector<CaseResult> SuiteResult::failures() const {
  std::vector<CaseResult> out;
  std::copy_if(cases.begin(), cases.end(), std::back_inserter(out), [](const CaseResult& c) { return !c.passed; });
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"omega", "prop-match", "io-split", "johnson", "plethysm"};
  return names;
}

std::vector<CaseResult> run_cases(const std::vector<std::function<CaseResult()>>& cases, unsigned workers) {
  if (workers == 0) workers = std::clamp(std::thread::hardware_concurrency(), 1U, 4U);
  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      try {
        results[k] = cases[k]();
      } catch (const std::exception& e) {
        results[k] = {"case " + std::to_string(k), false, std::string("exception: ") + e.what()};
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < std::min<std::size_t>(workers, cases.size()); ++w) pool.emplace_back(work);
    work();
  }
  return results;
}

Decomposition restrict_to_sizes(const Decomposition& d, int covariant_size, int contravariant_size) {
  Decomposition out;
  for (const auto& [b, m] : d.terms())
    if (b.covariant.size() == covariant_size && b.contravariant.size() == contravariant_size) out.add(b, m);
  return out;
}

CaseResult check_expression(const std::string& label, const CharExpr& expr, const Decomposition& expected, int n) {
  const Decomposition oracle = character_decompose(expr, n);
  const Decomposition truncated = evaluate_at_rank(expected, n);
  CaseResult out{label, oracle == truncated, ""};
  if (!out.passed) out.detail = "oracle " + oracle.to_string() + " vs " + truncated.to_string();
  return out;
}

CaseResult check_plethysm_against_characters(const Partition& outer, const Partition& inner, int n) {
  Decomposition expected;
  for (const auto& [kappa, c] : plethysm_schur(outer, inner)) expected.add({kappa, Partition()}, c);
  const std::string label = "s" + outer.to_string() + "[s" + inner.to_string() + "] n=" + std::to_string(n);
  return check_expression(label, CharExpr::standard().schur(inner).schur(outer), expected, n);
}

CaseResult check_graded_power_against_characters(const Bipartition& generator, int degree, int k, int n) {
  const CharExpr base = CharExpr::irreducible(generator);
  const CharExpr power = degree % 2 ? base.wedge(k) : base.sym(k);
  const int cov = k * generator.covariant.size();
  const int contra = k * generator.contravariant.size();
  const Decomposition oracle = restrict_to_sizes(character_decompose(power, n), cov, contra);
  const Decomposition expected =
      restrict_to_sizes(evaluate_at_rank(graded_symmetric_power(generator, degree, k), n), cov, contra);
  CaseResult out{"graded power V[" + generator.to_string() + "] deg " + std::to_string(degree) + " k=" +
                     std::to_string(k) + " n=" + std::to_string(n),
                 oracle == expected, ""};
  if (!out.passed) out.detail = "oracle " + oracle.to_string() + " vs " + expected.to_string();
  return out;
}

namespace {

using Case = std::function<CaseResult()>;

CaseResult expect_equal(std::string label, const BigInt& got, const BigInt& want) {
  CaseResult out{std::move(label), got == want, ""};
  if (!out.passed) out.detail = "got " + got.get_str() + ", expected " + want.get_str();
  return out;
}

std::vector<Case> omega_cases() {
  std::vector<Case> cases;
  for (const auto& [n, p, q] : {std::tuple{2, 1, 1}, std::tuple{3, 2, 1}, std::tuple{4, 2, 2}}) {
    cases.emplace_back([n = n, p = p, q = q] {
      const OmegaReport r = omega_prime_report(n, p, q);
      CaseResult out{"omega' n=" + std::to_string(n) + " p=" + std::to_string(p) + " q=" + std::to_string(q),
                     r.passed(), ""};
      out.detail = "invariant dim " + std::to_string(r.invariant_dimension) + ", rank " +
                   std::to_string(r.omega_prime_rank) + ", expected " + std::to_string(r.expected) +
                   (r.image_invariant ? "" : ", image not invariant");
      return out;
    });
  }
  const std::vector<std::array<int, 5>> cross{{3, 1, 0, 0, 1}, {3, 1, 0, 1, 0}, {4, 2, 1, 1, 2}, {3, 1, 1, 1, 1},
                                              {3, 2, 1, 0, 1}, {3, 1, 0, 1, 2}, {3, 1, 1, 0, 0}, {4, 2, 2, 0, 0}};
  for (const auto& c : cross) {
    cases.emplace_back([c] {
      const auto [n, p, q, r, s] = c;
      const bool reversal = p == s && q == r;
      const BigInt want = reversal ? BigInt(factorial(p) * factorial(q)) : BigInt(0);
      return expect_equal("cross n=" + std::to_string(n) + " (" + std::to_string(p) + "," + std::to_string(q) +
                              ")x(" + std::to_string(r) + "," + std::to_string(s) + ")",
                          static_cast<unsigned long>(cross_traceless_invariant_dim(n, p, q, r, s)), want);
    });
  }
  return cases;
}

std::vector<Case> prop_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  cases.emplace_back([] { return expect_equal("dim (1,0)", count_wheeled_prop(1, 0).dimension, 1); });
  cases.emplace_back([] { return expect_equal("dim (2,1)", count_wheeled_prop(2, 1).dimension, 3); });
  for (int q = 0; q <= o.prop_max_q; ++q) {
    for (int p = q; p <= std::min(o.prop_max_p, q + o.prop_max_degree); ++p) {
      cases.emplace_back([p, q] {
        const BigInt rep = multiplicity_pairing(albanese_w(p - q), decompose_mixed_tensor(p, q));
        return expect_equal("pairing (" + std::to_string(p) + "," + std::to_string(q) + ")", rep,
                            count_wheeled_prop(p, q).dimension);
      });
    }
  }
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 3; ++b) {
      cases.emplace_back([a, b] {
        return expect_equal("structures (" + std::to_string(a) + "," + std::to_string(b) + ")",
                            static_cast<unsigned long>(enumerate_structures(a, b).size()),
                            count_nonunital_prop(a, b).dimension);
      });
    }
  }
  return cases;
}

std::vector<Case> io_split_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  for (int i = 1; i <= o.io_split_max_degree; ++i) {
    cases.emplace_back([i] { return CaseResult{"io split i=" + std::to_string(i), verify_io_splitting(i), ""}; });
  }
  return cases;
}

std::vector<Case> johnson_cases() {
  std::vector<Case> cases;
  for (int n : {3, 4}) {
    cases.emplace_back([n] {
      return expect_equal("tau span n=" + std::to_string(n), static_cast<unsigned long>(tau_span_dim(n)),
                          n * n * (n - 1) / 2);
    });
    cases.emplace_back([n] {
      const BigInt poly = albanese_dim_polynomial(1).evaluate_integer(n);
      return expect_equal("tau span vs P_1 n=" + std::to_string(n), static_cast<unsigned long>(tau_span_dim(n)), poly);
    });
    cases.emplace_back([n] {
      const auto gens = magnus_generators(n);
      for (const auto& f : gens) {
        for (const auto& g : gens) {
          if (johnson_tau(compose(f, g)) != johnson_tau(f) + johnson_tau(g))
            return CaseResult{"tau additive n=" + std::to_string(n), false, f.to_string() + " o " + g.to_string()};
        }
      }
      return CaseResult{"tau additive n=" + std::to_string(n), true, ""};
    });
  }
  cases.emplace_back([] {
    const FreeEndomorphism k12 = magnus_generators(3).front();
    JohnsonValue want(3);
    want.add(1, 2, 1, 1);
    return CaseResult{"tau K12", johnson_tau(k12) == want, johnson_tau(k12).to_string()};
  });
  cases.emplace_back([] {
    const FreeEndomorphism k12 = magnus_generators(3).front();
    const Rational value = pairing_eval(Cochain::johnson({k12}), k12, DualIndex{1, 2, 1});
    return CaseResult{"pairing tau K12", value == -1, value.get_str()};
  });
  return cases;
}

std::vector<Case> plethysm_cases(const SuiteOptions& o) {
  std::vector<Case> cases;
  cases.emplace_back([] {
    const SchurExpansion got = plethysm_schur(Partition{2}, Partition{1, 1});
    const SchurExpansion want{{Partition{2, 2}, 1}, {Partition{1, 1, 1, 1}, 1}};
    return CaseResult{"h2[e2]", got == want, ""};
  });
  cases.emplace_back([] {
    const SchurExpansion got = plethysm_schur(Partition{1, 1}, Partition{1, 1});
    const SchurExpansion want{{Partition{2, 1, 1}, 1}};
    return CaseResult{"e2[e2]", got == want, ""};
  });
  for (int outer_size = 2; outer_size <= o.plethysm_max_size; ++outer_size) {
    for (int inner_size = 1; outer_size * inner_size <= o.plethysm_max_size; ++inner_size) {
      const int n = outer_size * inner_size <= 6 ? 5 : 4;
      for (const Partition& outer : partitions_of(outer_size))
        for (const Partition& inner : partitions_of(inner_size))
          cases.emplace_back([outer, inner, n] { return check_plethysm_against_characters(outer, inner, n); });
    }
  }
  struct Generator {
    Bipartition shape;
    int degree;
  };
  const std::vector<Generator> generators{
      {{Partition{1}, Partition()}, 1},
      {{Partition{1, 1}, Partition{1}}, 1},
      {{Partition{1, 1}, Partition()}, 2},
      {{Partition{1, 1, 1}, Partition{1}}, 2},
  };
  for (const auto& g : generators) {
    for (int k = 2; k * g.shape.covariant.size() <= o.plethysm_max_size; ++k) {
      const int size = k * (g.shape.covariant.size() + g.shape.contravariant.size());
      const int n = size <= 6 ? 5 : 4;
      if (g.shape.length() > n) continue;
      cases.emplace_back([g, k, n] { return check_graded_power_against_characters(g.shape, g.degree, k, n); });
    }
  }
  cases.emplace_back([] {
    return check_expression("U_1", CharExpr::standard().wedge(2) * CharExpr::dual_standard(), generator_u(1), 4);
  });
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q <= 3 && p + q <= 4; ++q) {
      cases.emplace_back([p, q] {
        CharExpr expr = CharExpr::trivial();
        for (int k = 0; k < p; ++k) expr = expr * CharExpr::standard();
        for (int k = 0; k < q; ++k) expr = expr * CharExpr::dual_standard();
        const int n = std::max(p + q, 1);
        return check_expression("H^{" + std::to_string(p) + "," + std::to_string(q) + "} n=" + std::to_string(n), expr,
                                decompose_mixed_tensor(p, q), n);
      });
    }
  }
  for (const char* text : {"1|0", "1,1|1", "2|1", "2,1|1,1", "0|2"}) {
    cases.emplace_back([text] {
      const Bipartition b = Bipartition::parse(text);
      const int n = std::min(b.length() + 1, kMaxCharacterRank);
      return check_expression("V[" + b.to_string() + "] x H", CharExpr::irreducible(b) * CharExpr::standard(),
                              tensor_by_standard(Decomposition::irreducible(b)), n);
    });
  }
  return cases;
}

std::vector<Case> cases_for(std::string_view name, const SuiteOptions& o) {
  if (name == "omega") return omega_cases();
  if (name == "prop-match") return prop_cases(o);
  if (name == "io-split") return io_split_cases(o);
  if (name == "johnson") return johnson_cases();
  if (name == "plethysm") return plethysm_cases(o);
  throw InputError("unknown suite '" + std::string(name) + "'");
}

}  // namespace

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  SuiteResult out;
  out.suite = std::string(name);
  if (name == "all") {
    for (const std::string& sub : suite_names()) {
      for (CaseResult& c : run_suite(sub, options).cases) {
        c.label = sub + ": " + c.label;
        out.cases.push_back(std::move(c));
      }
    }
    return out;
  }
  out.cases = run_cases(cases_for(name, options), options.workers);
  return out;
}

}  // namespace albanese
