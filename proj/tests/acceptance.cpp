// Acceptance run: one PASS/FAIL line per criterion; exits non-zero if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "postlie/catalog.hpp"
#include "postlie/search.hpp"

using namespace postlie;

namespace {

const Field Q = Field::rationals();

struct Verdict {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!passed)
        detail << "; ";
      detail << what;
      passed = false;
    }
  }
};

std::vector<std::pair<std::string, PostLiePair>> catalog_samples() {
  std::vector<std::pair<std::string, PostLiePair>> out;
  for (const auto& e : catalog_entries())
    for (const auto& s : e.samples)
      out.emplace_back(e.id + format_params(s), e.instantiate(s));
  return out;
}

Verdict ac1() {
  Verdict v;
  std::size_t count = 0;
  for (const auto& e : classification_dim2_entries())
    for (const auto& s : e.samples) {
      auto pair = e.instantiate(s);
      auto name = e.id + format_params(s);
      v.require(check_structure(pair).passed(), name + " fails the axioms");
      v.require(associated_bracket(pair.product(), pair.n()) == pair.g(),
                name + " bracket differs from the table");
      ++count;
    }
  v.require(classification_dim2_entries().size() == 17, "expected 17 families");
  if (v.passed)
    v.detail << count << " samples of V1-V17 exact";
  return v;
}

Verdict ac2() {
  Verdict v;
  for (const auto& [name, raw] : catalog_samples()) {
    auto pair = raw.validated();
    v.require(derived_identity_audit(pair).passed(), name + " derived identities");
    auto algebra = check_algebra(pair.product(), pair.n());
    v.require(algebra.passed(), name + " post-Lie algebra axioms");
    auto module = check_structure(pair).find("post6");
    v.require(module && module->passed, name + " left-module identity");
  }
  if (v.passed)
    v.detail << catalog_samples().size() << " structures, all basis triples";
  return v;
}

Verdict ac3() {
  Verdict v;
  for (const auto& s : find_entry("heis_commutative").samples)
    v.require(check_structure(find_entry("heis_commutative").instantiate(s)).passed(),
              "heis_commutative" + format_params(s));
  for (const auto& s : find_entry("sl2_family").samples) {
    auto name = "sl2_family" + format_params(s);
    auto pair = find_entry("sl2_family").instantiate(s);
    v.require(check_structure(pair).passed(), name + " fails the axioms");
    auto c = classify_low_dim(pair.g().validated());
    v.require(c.solvable && !c.nilpotency_class, name + " g is not solvable non-nilpotent");
    auto lambda = s[1].is_zero() ? Scalar(Q, 0) : -(s[0] / s[1]);
    v.require(std::find(c.ratio_set.begin(), c.ratio_set.end(), lambda) != c.ratio_set.end(),
              name + " ratio set lacks " + lambda.to_string());
  }
  if (v.passed)
    v.detail << "3 Heisenberg + 3 sl2 samples";
  return v;
}

Verdict ac4() {
  Verdict v;
  for (auto l : {Scalar(Q, 2), Scalar(Q, -1), Scalar(Q, 1, 3)}) {
    auto pair = lambda_product(n3_algebra(Q), l);
    v.require(check_structure(pair).passed(), "lambda " + l.to_string() + " fails");
    v.require(pair.n() == n3_algebra(Q).scaled(Scalar(Q, 1) - Scalar(Q, 2) * l),
              "n-bracket is not (1-2λ)[,]");
  }
  auto report = check_structure(lambda_product(sl2_algebra(Q), Scalar(Q, 2)));
  auto* post6 = report.find("post6");
  v.require(post6 && !post6->passed && post6->witness.size() == 3,
            "sl2 with λ = 2 lacks a post6 witness");
  if (v.passed) {
    v.detail << "sl2, λ = 2: post6 fails at (";
    for (std::size_t k = 0; k < 3; ++k)
      v.detail << (k ? "," : "") << "e" << post6->witness[k] + 1;
    v.detail << ")";
  }
  return v;
}

Verdict ac5() {
  Verdict v;
  auto sl2 = sl2_algebra(Q);
  auto der = derivation_algebra(sl2);
  v.require(der.dim() == 3, "Der(sl2) dim " + std::to_string(der.dim()));
  for (std::size_t i = 0; i < 3; ++i)
    v.require(der.contains(adjoint_matrix(sl2, i)), "ad(e" + std::to_string(i + 1) + ") missing");
  v.require(is_complete_lie(sl2), "sl2 not complete");
  v.require(derivation_algebra(abelian_algebra(Q, 2)).dim() == 4, "Der(abelian(2)) != 4");
  std::ifstream in(POSTLIE_TEST_DATA_DIR "/golden/n3_derivations.json");
  v.require(static_cast<bool>(in), "golden file missing");
  if (in) {
    auto golden = nlohmann::json::parse(in);
    auto n3 = n3_algebra(Q);
    auto dn3 = derivation_algebra(n3);
    v.require(dn3.dim() == 6 && dn3.dim() == golden["dim"].get<std::size_t>(),
              "Der(n3) dim " + std::to_string(dn3.dim()));
    for (const auto& m : golden["basis"]) {
      std::vector<Scalar> entries;
      for (const auto& row : m)
        for (const auto& x : row)
          entries.push_back(Scalar::parse(Q, x.get<std::string>()));
      v.require(dn3.contains(Matrix(Q, 3, 3, entries)), "golden derivation outside Der(n3)");
    }
  }
  if (v.passed)
    v.detail << "dims 3 / 4 / 6";
  return v;
}

Verdict ac6() {
  Verdict v;
  for (const auto& [name, raw] : catalog_samples()) {
    auto e = embed_semidirect(raw.validated());
    v.require(e.report.passed(), name + " embedding");
    v.require(check_lie_axioms(e.semidirect).passed(), name + " semidirect jacobi");
  }
  return v;
}

Verdict ac7() {
  Verdict v;
  for (const auto& [name, raw] : catalog_samples()) {
    auto pair = raw.validated();
    auto e = embed_semidirect(pair);
    const auto d = pair.dim();
    std::vector<GraphElement> graph;
    for (std::size_t i = 0; i < d; ++i) {
      Vector x(e.images[i].begin(), e.images[i].begin() + d);
      Matrix m(pair.field(), d, d);
      for (std::size_t k = 0; k < e.derivations.dim(); ++k)
        m += e.images[i][d + k] * e.derivations.basis()[k];
      graph.push_back({x, m});
    }
    auto back = structure_from_graph_subalgebra(pair.n(), graph);
    v.require(back.g == pair.g() && back.product == pair.product(), name + " round trip");
  }
  return v;
}

Verdict ac8() {
  Verdict v;
  auto heis = find_entry("heis_commutative")
                  .instantiate(std::vector<Scalar>{Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, 0)})
                  .validated();
  auto zero = PostLiePair(n3_algebra(Q), n3_algebra(Q), BilinearProduct(Q, 3)).validated();
  for (const auto& [name, pair] : {std::pair{"heis_commutative(0,1,0)", heis},
                                   std::pair{"zero product on n3", zero}}) {
    auto r = prelie_from_two_step(pair);
    v.require(r.report.passed(), std::string(name) + " reduction report");
    v.require(check_structure(pair.g(), abelian_algebra(Q, 3), r.product).passed(),
              std::string(name) + " pre-Lie axioms");
  }
  return v;
}

Verdict ac9() {
  Verdict v;
  auto f = Field::prime(3);
  auto ab = abelian_algebra(f, 2);
  auto hits = enumerate_products({ab, ab});
  auto expected = oracle::commutative_associative(3);
  bool same = hits.size() == expected.size();
  for (std::size_t h = 0; same && h < hits.size(); ++h)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          same = same && hits[h](i, j)[k].residue() ==
                             static_cast<std::uint32_t>(expected[h][oracle::idx(i, j, k)]);
  v.require(same, "hit set differs from the oracle");
  auto orbits = orbit_reduce(hits, ab, ab);
  auto classes = oracle::isomorphism_classes(expected, 3);
  v.require(orbits.size() == classes, "orbits " + std::to_string(orbits.size()) + " vs oracle " +
                                          std::to_string(classes));
  if (v.passed)
    v.detail << hits.size() << " products, " << orbits.size() << " orbits";
  return v;
}

Verdict ac10() {
  Verdict v;
  auto f = Field::prime(5);
  auto report = nonexistence_probe("perfect", sl2_algebra(f));
  auto hits = report.matching();
  v.require(report.endomorphisms == 1953125, "sweep size");
  v.require(hits.size() == 2, std::to_string(hits.size()) + " perfect hits");
  if (hits.size() == 2) {
    v.require(hits[0]->phi == Matrix(f, 3, 3), "first hit is not φ = 0");
    v.require(hits[1]->phi == Scalar(f, -1) * Matrix::identity(f, 3), "second hit is not φ = -id");
  }
  if (v.passed)
    v.detail << report.banner() << "; " << report.valid.size() << " structures, perfect g only for φ ∈ {0, -id}";
  return v;
}

Verdict ac11() {
  Verdict v;
  struct Case {
    const char* id;
    std::vector<Scalar> params;
    bool expected;
  };
  std::vector<Case> cases{{"V1", {}, true},           {"V5", {}, true},  {"V9", {Scalar(Q, 0)}, true},
                          {"V2", {}, false},          {"V6", {}, false}, {"V8", {}, false}};
  for (const auto& c : cases) {
    auto pair = find_entry(c.id).instantiate(c.params).validated();
    auto name = std::string(c.id) + format_params(c.params);
    bool complete = is_complete_structure(pair);
    bool sampled = sampled_left_nilpotency(pair, 50, 0);
    v.require(complete == sampled, name + " disagrees with the 50-sample check");
    v.require(complete == c.expected, name + " complete = " + (complete ? "true" : "false") +
                                          ", expected " + (c.expected ? "true" : "false"));
  }
  return v;
}

Verdict ac12() {
  Verdict v;
  for (const auto& [name, raw] : catalog_samples()) {
    auto audit = theorem_audit(raw.validated());
    v.require(audit.consistent(), name + " VIOLATION");
  }
  return v;
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria{
      {"AC1 classification reproduction", ac1, 1.0},
      {"AC2 derived-identity audit", ac2, 0},
      {"AC3 parametrized families", ac3, 0},
      {"AC4 scalar-product proposition", ac4, 0},
      {"AC5 derivations and completeness", ac5, 0},
      {"AC6 embedding theorem", ac6, 0},
      {"AC7 round-trip correspondence", ac7, 0},
      {"AC8 two-step reduction", ac8, 0},
      {"AC9 finite-model oracle equality", ac9, 10.0},
      {"AC10 simple-pair rigidity at F5", ac10, 60.0},
      {"AC11 completeness decisions", ac11, 0},
      {"AC12 theorem audit consistency", ac12, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      std::ostringstream why;
      why << "runtime " << seconds << " s exceeds " << c.limit_seconds << " s";
      v.require(false, why.str());
    }
    failed += v.passed ? 0 : 1;
    std::cout << (v.passed ? "PASS " : "FAIL ") << c.name << " [" << std::fixed
              << std::setprecision(3) << seconds << " s]";
    auto detail = v.detail.str();
    if (!detail.empty())
      std::cout << " - " << detail;
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
