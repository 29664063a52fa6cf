// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "anosov/decider.hpp"
#include "anosov/errors.hpp"
#include "anosov/graph_families.hpp"
#include "anosov/lyndon.hpp"
#include "anosov/polynomial.hpp"
#include "anosov/witness.hpp"
#include "support/oracles.hpp"

using namespace anosov;

namespace {

// Pinned limits.
constexpr double kTreeSeconds = 300;
constexpr double kGridSeconds = 60;
constexpr double kShortSeconds = 1;
constexpr double kWitnessSeconds = 30;
constexpr unsigned kOracleBits = 256;  // root-modulus oracle, tolerance 1e-20
constexpr int kRandomPolynomials = 1000;
constexpr int kOracleInstances = 500;

struct Outcome {
  bool pass = true;
  std::string detail;
  double limit_seconds = 0;  // 0 = no limit
};

class Tally {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failures_ > 0) s << ", " << failures_ << " failed, first: " << first_failure_;
    return s.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_failure_;
};

std::string where(const std::string& family, int n, int c, const std::string& label = "") {
  return family + " n=" + std::to_string(n) + " c=" + std::to_string(c) + (label.empty() ? "" : " " + label);
}

bool is_rotation(const Permutation& p) {
  const int n = p.degree();
  const int k = p(0);
  for (int i = 0; i < n; ++i) {
    if (p(i) != (i + k) % n) return false;
  }
  return true;
}

// ------------------------------------------------------------------ 1

Outcome trees(std::uint64_t) {
  Tally t;
  int count = 0;
  for (int n = 1; n <= 9; ++n) {
    for (const auto& g : families::nonisomorphic_trees(n)) {
      ++count;
      for (int c = 2; c <= 6; ++c) t.require(!classify(g, c).any_anosov(), where("tree", n, c));
    }
  }
  return {t.ok(), std::to_string(count) + " trees, " + t.summary(), kTreeSeconds};
}

// ------------------------------------------------------------------ 2

Outcome cycles(std::uint64_t) {
  Tally t;
  int rotation_real = 0;
  int rotation_twisted = 0;
  int twisted_deviating = 0;
  for (int n = 5; n <= 8; ++n) {
    Graph g = families::cycle(n);
    for (int c = 2; c <= 8; ++c) {
      auto cls = classify(g, c);
      for (std::size_t i = 0; i < cls.data.size(); ++i) {
        const auto& d = cls.data[i];
        const bool anosov = cls.verdicts[i].anosov;
        const auto& el = d.group.elements();
        const bool has_rotation =
            std::any_of(el.begin(), el.end(), [](const Permutation& p) { return !p.is_identity() && is_rotation(p); });
        if (d.is_standard() || !has_rotation) {
          // standard and reflection-type forms, whatever tau is
          t.require(!anosov, where("cycle", n, c, d.label));
        } else if (d.is_real()) {
          ++rotation_real;
          t.require(anosov == (n > c), where("cycle", n, c, d.label));
        } else {
          // tau != id: A u tau(A) may be invariant for short arcs A, so
          // n > c is not the rule here; checked against the literal oracle
          ++rotation_twisted;
          if (anosov != (n > c)) ++twisted_deviating;
          t.require(cls.verdicts[i] == oracle_decide(g, c, d), where("cycle", n, c, d.label));
        }
      }
    }
  }
  return {t.ok(),
          std::to_string(rotation_real) + " rotation real forms, " + std::to_string(rotation_twisted) +
              " rotation forms with tau != id (" + std::to_string(twisted_deviating) +
              " differ from n > c, checked against the oracle), " + t.summary(),
          kGridSeconds};
}

// ------------------------------------------------------------------ 3

Outcome k22_standard(std::uint64_t) {
  Tally t;
  Graph g = families::complete_bipartite(2, 2);
  for (int c = 2; c <= 12; ++c) t.require(decide_standard(g, c).anosov == (c <= 3), where("K22", 2, c));
  return {t.ok(), "c = 2..12, " + t.summary(), kShortSeconds};
}

// ------------------------------------------------------------------ 4, 5

/// d = 1 for the trivial datum, d > 1 for (Z2, id), d < 0 for (Z2, swap).
int datum_class(const GaloisDatum& d) {
  if (d.is_standard()) return 1;
  return d.is_real() ? 2 : -1;
}

Outcome two_cliques(std::uint64_t) {
  Tally t;
  for (int n = 2; n <= 4; ++n) {
    Graph g = families::two_cliques(n);
    for (int c = 2; c <= 8; ++c) {
      auto cls = classify(g, c);
      t.require(cls.data.size() == 3, where("2K", n, c, "data count"));
      for (std::size_t i = 0; i < cls.data.size(); ++i) {
        const int d = datum_class(cls.data[i]);
        const bool expected = d > 1 || (d <= 1 && c < n);
        t.require(cls.verdicts[i].anosov == expected, where("2K", n, c, cls.data[i].label));
      }
    }
  }
  return {t.ok(), t.summary(), kGridSeconds};
}

Outcome complete_bipartite(std::uint64_t) {
  Tally t;
  for (int n = 2; n <= 4; ++n) {
    Graph g = families::complete_bipartite(n, n);
    for (int c = 2; c <= 8; ++c) {
      auto cls = classify(g, c);
      t.require(cls.data.size() == 3, where("Knn", n, c, "data count"));
      for (std::size_t i = 0; i < cls.data.size(); ++i) {
        const int d = datum_class(cls.data[i]);
        const bool expected = (d >= 1 && c < 2 * n) || (d < 1 && c < n);
        t.require(cls.verdicts[i].anosov == expected, where("Knn", n, c, cls.data[i].label));
      }
    }
  }
  // real forms all Anosov, twisted form not: real-form criterion does not
  // carry over to tau != id
  auto cls = classify(families::complete_bipartite(2, 2), 3);
  bool real_all = true;
  bool twisted_none = true;
  for (std::size_t i = 0; i < cls.data.size(); ++i) {
    if (cls.data[i].is_real()) real_all = real_all && cls.verdicts[i].anosov;
    else twisted_none = twisted_none && !cls.verdicts[i].anosov;
  }
  t.require(real_all && twisted_none, "n=2 c=3 real/twisted split");
  return {t.ok(), t.summary() + "; n=2 c=3: real forms Anosov, twisted form not", kGridSeconds};
}

// ------------------------------------------------------------------ 6

Outcome hexagon(std::uint64_t) {
  Tally t;
  Graph g = families::cycle(6);
  // a rotates by one, b fixes node 0 and swaps nodes 1 and 5
  auto a = Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}});
  auto b = Permutation::from_cycles(6, {{1, 5}, {2, 4}});
  GaloisDatum d{PermGroup::generate(6, {a * a, b}), b, "hexagon"};
  validate_datum(quotient_graph(g), d);
  t.require(decide(g, 2, d).anosov, "c=2 Anosov");
  auto v6 = decide(g, 6, d);
  t.require(!v6.anosov, "c=6 not Anosov");
  t.require(v6.witness && v6.witness->closure == full_mask(6) && v6.witness->sum_string() == "6/1",
            "c=6 witness is the full cycle with sum 6");
  return {t.ok(), t.summary(), kShortSeconds};
}

// ------------------------------------------------------------------ 7

Outcome dimensions(std::uint64_t seed) {
  Tally t;
  for (const auto& g : oracle::corpus(seed, 200, 9)) {
    t.require(dimension(g, 2) == static_cast<std::size_t>(g.size()) + g.edge_count(), "class two");
  }
  for (int n = 1; n <= 4; ++n) {
    for (int c = 1; c <= 5; ++c) {
      long long w = 0;
      for (int k = 1; k <= c; ++k) w += oracle::witt(n, k);
      t.require(dimension(families::complete(n), c) == static_cast<std::size_t>(w), where("K", n, c));
    }
  }
  auto left = oracle::corpus(seed + 100, 40, 5);
  auto right = oracle::corpus(seed + 200, 40, 4);
  for (std::size_t i = 0; i < left.size(); ++i) {
    Graph u = families::disjoint_union(left[i], right[i]);
    for (int c = 1; c <= 4; ++c) {
      t.require(dimension(u, c) == dimension(left[i], c) + dimension(right[i], c), "union");
    }
  }
  return {t.ok(), t.summary(), 0};
}

// ------------------------------------------------------------------ 8

/// Vectors of total <= c that are unit vectors or have connected support of
/// size >= 2, listed directly.
std::set<WeightVector> closed_form_weights(const Graph& g, int c) {
  std::set<WeightVector> out;
  WeightVector e(g.size(), 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == g.size()) {
      std::vector<int> supp;
      int total = 0;
      for (int x = 0; x < g.size(); ++x) {
        if (e[x] > 0) supp.push_back(x);
        total += e[x];
      }
      if (total == 0) return;
      if ((supp.size() == 1 && total == 1) || (supp.size() >= 2 && oracle::induced_connected(g, supp))) {
        out.insert(e);
      }
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
    e[v] = 0;
  };
  rec(rec, 0, c);
  return out;
}

Outcome weights(std::uint64_t seed) {
  Tally t;
  long long compared = 0;
  for (const auto& g : oracle::corpus(seed + 1, 150, 6)) {
    for (int c = 1; c <= 4; ++c) {
      auto basis = enumerate_lyndon(g, c);
      std::set<WeightVector> enumerated;
      for (const auto& e : basis.elements) enumerated.insert(e.weight);
      auto expected = closed_form_weights(g, c);
      compared += static_cast<long long>(expected.size());
      t.require(std::includes(expected.begin(), expected.end(), enumerated.begin(), enumerated.end()),
                "enumerated within closed form");
      t.require(std::includes(enumerated.begin(), enumerated.end(), expected.begin(), expected.end()),
                "closed form within enumerated");
      t.require(weight_set(g, c) == expected, "library closed form");
    }
  }
  return {t.ok(), std::to_string(compared) + " weights, " + t.summary(), 0};
}

// ------------------------------------------------------------------ 9

Outcome oracle_equivalence(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed + 2);
  // every other graph is two copies of a small graph joined by a partial
  // matching, so swap symmetries (and twisted data) are common
  auto graphs = oracle::corpus(seed + 2, kOracleInstances, 7);
  for (std::size_t i = 1; i < graphs.size(); i += 2) {
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    Graph h = oracle::random_graph(rng, k, 0.5);
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 2 * k; ++v) names.push_back("v" + std::to_string(v + 1));
    for (auto [u, v] : h.edges()) {
      edges.emplace_back(u, v);
      edges.emplace_back(u + k, v + k);
    }
    for (int v = 0; v < k; ++v) {
      if (std::bernoulli_distribution(0.5)(rng)) edges.emplace_back(v, v + k);
    }
    graphs[i] = Graph(names, edges);
  }
  int twisted = 0;
  int not_anosov = 0;
  for (const auto& g : graphs) {
    auto data = galois_data(quotient_graph(g));
    // half of the draws prefer tau != id when the graph has such data
    std::vector<std::size_t> twisted_ids;
    for (std::size_t k = 0; k < data.size(); ++k) {
      if (!data[k].is_real()) twisted_ids.push_back(k);
    }
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, data.size() - 1)(rng);
    if (!twisted_ids.empty() && std::bernoulli_distribution(0.5)(rng)) {
      pick = twisted_ids[std::uniform_int_distribution<std::size_t>(0, twisted_ids.size() - 1)(rng)];
    }
    const auto& d = data[pick];
    const int c = std::uniform_int_distribution<int>(2, 5)(rng);
    auto v = decide(g, c, d);
    twisted += d.is_real() ? 0 : 1;
    not_anosov += v.anosov ? 0 : 1;
    t.require(v == oracle_decide(g, c, d), "instance " + std::to_string(&g - graphs.data()));
  }
  return {t.ok(),
          std::to_string(graphs.size()) + " instances (" + std::to_string(twisted) + " with tau != id, " +
              std::to_string(not_anosov) + " not Anosov), " + t.summary(),
          0};
}

// ------------------------------------------------------------------ 10

/// Graphs whose coherent components all have 2 or 3 vertices.
std::vector<Graph> unit_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    Graph pattern = oracle::random_graph(rng, k, std::uniform_real_distribution<double>(0.2, 0.9)(rng));
    std::vector<int> owner;
    std::vector<bool> clique;
    for (int v = 0; v < k; ++v) {
      const int m = std::uniform_int_distribution<int>(2, 3)(rng);
      for (int r = 0; r < m; ++r) owner.push_back(v);
      clique.push_back(std::bernoulli_distribution(0.5)(rng));
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < owner.size(); ++i) names.push_back("v" + std::to_string(i + 1));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < owner.size(); ++a) {
      for (std::size_t b = a + 1; b < owner.size(); ++b) {
        bool e = owner[a] == owner[b] ? clique[owner[a]] : pattern.adjacent(owner[a], owner[b]);
        if (e) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
    Graph g(names, edges);
    auto q = quotient_graph(g);
    if (std::all_of(q.weight.begin(), q.weight.end(), [](int w) { return w == 2 || w == 3; })) out.push_back(g);
  }
  return out;
}

Outcome witness_soundness(std::uint64_t seed) {
  Tally t;
  double slowest = 0;
  Graph k22 = families::complete_bipartite(2, 2);
  for (int c : {2, 3}) {
    auto start = std::chrono::steady_clock::now();
    auto w = build_witness(k22, c);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    slowest = std::max(slowest, secs);
    const std::string at = where("K22", 2, c);
    t.require(secs < kWitnessSeconds, at + " runtime");
    t.require(is_lie_automorphism(lyndon_basis(k22, c), w.matrix), at + " automorphism");
    const IntPolynomial cp = charpoly_multimodular(w.matrix);
    t.require(cp == w.char_poly, at + " char poly");
    t.require(abs(cp.coeff(0)) == 1, at + " constant term");
    t.require(is_hyperbolic(cp), at + " hyperbolic");
    t.require(!oracle::numeric_unit_circle_root(cp), at + " numeric modulus");
  }
  int built = 0;
  int refused = 0;
  for (const auto& g : unit_corpus(seed + 3, 40)) {
    for (int c = 2; c <= 3; ++c) {
      const bool anosov = decide_standard(g, c).anosov;
      auto start = std::chrono::steady_clock::now();
      try {
        auto w = build_witness(g, c);
        ++built;
        t.require(anosov, "witness built for a non-Anosov form");
        t.require(w.automorphism && w.integer_like && w.hyperbolic, "witness flags");
        t.require(abs(w.char_poly.coeff(0)) == 1, "witness constant term");
      } catch (const NotAnosovError&) {
        ++refused;
        t.require(!anosov, "witness refused for an Anosov form");
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      slowest = std::max(slowest, secs);
      t.require(secs < kWitnessSeconds, "runtime");
    }
  }
  std::ostringstream s;
  s << built << " built, " << refused << " refused, slowest " << slowest << " s, " << t.summary();
  return {t.ok(), s.str(), 0};
}

// ------------------------------------------------------------------ 11

IntPolynomial random_poly(std::mt19937_64& rng, int degree, int bound) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<BigInt> c(degree + 1);
  for (auto& x : c) x = coef(rng);
  while (c.back() == 0) c.back() = coef(rng);
  return IntPolynomial(c);
}

IntPolynomial cyclotomic(int n) {
  IntPolynomial p = IntPolynomial::monomial(1, n) - IntPolynomial{1};
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_quotient(p, cyclotomic(d));
  }
  return p;
}

Outcome hyperbolicity(std::uint64_t seed) {
  Tally t;
  const IntPolynomial lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  const IntPolynomial salem4{1, -1, -1, -1, 1};  // X^4 - X^3 - X^2 - X + 1
  for (int n = 1; n <= 30; ++n) t.require(!is_hyperbolic(cyclotomic(n)), "cyclotomic " + std::to_string(n));
  t.require(!is_hyperbolic(lehmer), "Lehmer");
  t.require(!is_hyperbolic(salem4), "Salem degree 4");
  t.require(is_hyperbolic(IntPolynomial{1, -3, 1}), "X^2 - 3X + 1");
  t.require(!oracle::numeric_unit_circle_root(IntPolynomial{1, -3, 1}), "oracle X^2 - 3X + 1");
  t.require(oracle::numeric_unit_circle_root(lehmer), "oracle Lehmer");

  std::mt19937_64 rng(seed + 4);
  int on_circle = 0;
  int disagreements = 0;
  for (int i = 0; i < kRandomPolynomials; ++i) {
    IntPolynomial p;
    switch (i % 5) {
      case 0:
      case 1:
        p = random_poly(rng, std::uniform_int_distribution<int>(1, 12)(rng), 6);
        break;
      case 2: {
        // random factor times a cyclotomic factor
        const int k = std::uniform_int_distribution<int>(1, 15)(rng);
        IntPolynomial c = cyclotomic(k);
        p = random_poly(rng, std::uniform_int_distribution<int>(1, std::max(1, 12 - c.degree()))(rng), 6) * c;
        if (p.degree() > 12) p = c;
        break;
      }
      case 3: {
        // palindromic: roots come in pairs r, 1/r
        const int half = std::uniform_int_distribution<int>(1, 6)(rng);
        IntPolynomial r = random_poly(rng, half, 4);
        std::vector<BigInt> c(2 * half + 1);
        for (int j = 0; j <= half; ++j) c[j] = c[2 * half - j] = r.coeff(j);
        c[2 * half] = c[0] = 1;
        p = IntPolynomial(c);
        break;
      }
      default:
        p = random_poly(rng, std::uniform_int_distribution<int>(1, 2)(rng), 4) * lehmer;
        break;
    }
    const bool numeric = oracle::numeric_unit_circle_root(p);
    on_circle += numeric ? 1 : 0;
    if (is_hyperbolic(p) == numeric) {
      ++disagreements;
      t.require(false, p.to_string());
    } else {
      t.require(true, "");
    }
  }
  std::ostringstream s;
  s << kRandomPolynomials << " random (" << on_circle << " with a unit-modulus root, oracle at " << kOracleBits
    << " bits), " << disagreements << " disagreements, " << t.summary();
  return {t.ok(), s.str(), 0};
}

// ------------------------------------------------------------------ 12

Outcome jacobi(std::uint64_t seed) {
  Tally t;
  std::size_t algebras = 0;
  for (const auto& g : oracle::corpus(seed + 1, 150, 6)) {
    for (int c = 2; c <= 4; ++c) {
      ++algebras;
      t.require(oracle::lie_violations(lyndon_basis(g, c)) == 0, where("corpus", g.size(), c));
    }
  }
  return {t.ok(), std::to_string(algebras) + " algebras, " + t.summary(), 0};
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240611;
  int only = 0;  // 0 runs every criterion
  for (int i = 1; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) seed = std::strtoull(argv[i] + 7, nullptr, 10);
    if (std::strncmp(argv[i], "--only=", 7) == 0) only = std::atoi(argv[i] + 7);
  }
  std::cout << "seed " << seed << "\n";

  const std::pair<const char*, std::function<Outcome(std::uint64_t)>> criteria[] = {
      {"trees have no Anosov forms", trees},
      {"cycle forms", cycles},
      {"K22 standard form", k22_standard},
      {"two cliques formula", two_cliques},
      {"complete bipartite formula", complete_bipartite},
      {"hexagon dihedral form", hexagon},
      {"dimensions", dimensions},
      {"weight sets", weights},
      {"decide equals oracle", oracle_equivalence},
      {"witness soundness", witness_soundness},
      {"hyperbolicity tester", hyperbolicity},
      {"Jacobi and antisymmetry", jacobi},
  };

  int failed = 0;
  int index = 0;
  int ran = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    if (only != 0 && only != index) continue;
    ++ran;
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = run(seed);
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what(), 0};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = out.pass;
    if (out.limit_seconds > 0 && secs > out.limit_seconds) {
      pass = false;
      out.detail += "; over time limit";
    }
    failed += pass ? 0 : 1;
    std::printf("%s  %2d  %-28s %8.2f s  %s\n", pass ? "PASS" : "FAIL", index, name, secs, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", ran - failed, ran);
  return failed;
}
