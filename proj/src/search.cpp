#include "curvelab/search.hpp"

#include <atomic>
#include <optional>
#include <random>
#include <thread>

#include "curvelab/frobclass.hpp"

namespace curvelab {

namespace {

// Degree-d monomials in x, y, z in the polynomial's own term order.
std::vector<Monomial> degree_monomials(int d) {
  std::vector<Monomial> out;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b) {
      Monomial m;
      m.e = {uint16_t(a), uint16_t(b), uint16_t(d - a - b)};
      out.push_back(m);
    }
  std::sort(out.begin(), out.end(), MonoLess{});
  return out;
}

struct Space {
  const Field* f;
  int d;
  std::vector<Monomial> monos;

  // Candidates with first nonzero coefficient at position j: q^(M-1-j).
  long long total_canonical() const {
    long long q = f->q(), total = 0, block = 1;
    for (size_t j = 0; j < monos.size(); ++j) {
      total += block;
      if (total > (long long)field_cap() * 4) return -1;  // overflow guard
      block *= q;
    }
    return total;
  }

  std::vector<uint32_t> decode(long long idx) const {
    const size_t M = monos.size();
    long long q = f->q();
    // blocks in decreasing size: j = M-1 has size 1 ... accumulate from j = 0
    std::vector<long long> block(M);
    block[M - 1] = 1;
    for (size_t j = M - 1; j > 0; --j) block[j - 1] = block[j] * q;
    std::vector<uint32_t> v(M, 0);
    size_t j = 0;
    while (idx >= block[j]) idx -= block[j++];
    v[j] = 1;
    for (size_t k = M - 1; k > j; --k) {
      v[k] = uint32_t(idx % q);
      idx /= q;
    }
    return v;
  }
};

std::optional<std::string> evaluate(const Space& sp,
                                    const std::vector<uint32_t>& coeffs,
                                    const SearchConfig& cfg) {
  const Field& F = *sp.f;
  bool pth_power = true;
  MultiPoly f(F, 3);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const Monomial& m = sp.monos[i];
    if (m.e[0] % F.p() || m.e[1] % F.p() || m.e[2] % F.p()) pth_power = false;
    f.add_term(m, coeffs[i]);
  }
  if (f.is_zero() || pth_power) return std::nullopt;
  for (int v = 0; v < 3; ++v) {
    bool line_divides = true;
    for (auto& [m, c] : f.terms()) {
      (void)c;
      if (m.e[v] == 0) line_divides = false;
    }
    if (line_divides) return std::nullopt;
  }
  PlaneCurve C(std::move(f), true);
  if (cfg.require_fnc && !fnc_test(C)) return std::nullopt;
  if (cfg.require_singular && singular_points_over(C, 1).empty())
    return std::nullopt;
  return format_poly(C.F());
}

}  // namespace

SearchResult search_curves(const SearchConfig& cfg) {
  SearchResult res;
  const Field& F = build_field(cfg.p, cfg.s);
  Space sp{&F, cfg.d, degree_monomials(cfg.d)};

  // Degree range forced by nonclassicality: d = 1 or d >= sqrt(q) + 1.
  if (cfg.require_fnc && cfg.d > 1 &&
      (long long)(cfg.d - 1) * (cfg.d - 1) < (long long)F.q())
    return res;

  std::vector<std::vector<uint32_t>> pool;  // random-mode samples, in order
  long long total = 0;
  if (cfg.exhaustive) {
    total = sp.total_canonical();
    if (total < 0 || total > (long long)field_cap())
      throw FieldTooLarge("exhaustive search space exceeds the cap");
  } else {
    std::mt19937_64 rng{cfg.seed};
    pool.reserve(size_t(cfg.samples));
    for (long long i = 0; i < cfg.samples; ++i) {
      std::vector<uint32_t> v(sp.monos.size());
      for (auto& c : v) c = uint32_t(rng() % F.q());
      size_t j = 0;
      while (j < v.size() && v[j] == 0) ++j;
      if (j == v.size()) continue;  // zero vector: skip
      uint32_t inv = F.inv(v[j]);
      for (auto& c : v) c = F.mul(c, inv);
      pool.push_back(std::move(v));
    }
    total = (long long)pool.size();
  }

  const long long chunk = 1024;
  const long long nchunks = (total + chunk - 1) / chunk;
  std::vector<std::vector<std::string>> per_chunk;
  per_chunk.resize(size_t(nchunks));
  std::atomic<long long> next{0};
  int nthreads = std::max(1, cfg.workers);
  auto work = [&]() {
    for (;;) {
      long long k = next.fetch_add(1);
      if (k >= nchunks) return;
      long long lo = k * chunk, hi = std::min(total, lo + chunk);
      auto& out = per_chunk[size_t(k)];
      for (long long i = lo; i < hi; ++i) {
        auto v = cfg.exhaustive ? sp.decode(i) : pool[size_t(i)];
        if (auto text = evaluate(sp, v, cfg)) out.push_back(std::move(*text));
      }
    }
  };
  if (nthreads == 1) {
    work();
  } else {
    std::vector<std::thread> ts;
    for (int t = 0; t < nthreads; ++t) ts.emplace_back(work);
    for (auto& t : ts) t.join();
  }
  res.scanned = total;
  for (auto& c : per_chunk)
    for (auto& s : c) {
      ++res.matched;
      if (cfg.limit < 0 || (long long)res.found.size() < cfg.limit)
        res.found.push_back(std::move(s));
    }
  return res;
}

}  // namespace curvelab
