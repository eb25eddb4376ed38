#include "hurwitzkit/hermite_biehler.hpp"

#include <algorithm>
#include <deque>

namespace hwk {

namespace {

Polynomial squarefree_part(const Polynomial& g) {
  if (g.degree() == 0) return g;
  Polynomial d = poly_gcd(g, g.derivative());
  if (d.degree() == 0) return g;
  return poly_divmod(g, d).first;
}

// Divides (x - r)^k out of g until g(r) != 0.
Polynomial deflate_root(Polynomial g, const Rational& r) {
  Polynomial factor({-r, Rational(1)});
  while (!g.is_zero() && g(r) == 0 && g.degree() >= 1)
    g = poly_divmod(g, factor).first;
  return g;
}

// Entries hold distinct roots: a point entry carries its root exactly, an
// interval entry encloses its root in (lo, hi]. Two entries are separated
// when their root order is decidable.
bool entries_separated(const RootInterval& a, const RootInterval& b) {
  if (a.is_point() && b.is_point()) return a.lo != b.lo;
  if (a.is_point()) return a.lo <= b.lo || a.lo >= b.hi;
  if (b.is_point()) return b.lo <= a.lo || b.lo >= a.hi;
  return a.hi <= b.lo || b.hi <= a.lo;
}

// Valid only for separated entries.
bool root_before(const RootInterval& a, const RootInterval& b) {
  if (a.is_point() && b.is_point()) return a.lo < b.lo;
  if (a.is_point()) return a.lo <= b.lo;
  if (b.is_point()) return b.lo >= a.hi;
  return a.hi <= b.lo;
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("sturm_sequence: zero polynomial");
  std::vector<Polynomial> chain{g};
  if (g.degree() == 0) return chain;
  chain.push_back(scaled_primitive(g.derivative()));
  while (chain.back().degree() >= 1) {
    Polynomial rem =
        poly_divmod(chain[chain.size() - 2], chain.back()).second;
    if (rem.is_zero()) break;
    chain.push_back(scaled_primitive(-rem));
  }
  return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& g : chain) {
    int s = sign_of(g(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

Rational cauchy_root_bound(const Polynomial& g) {
  if (g.is_zero())
    throw std::domain_error("cauchy_root_bound: zero polynomial");
  Rational max_ratio = 0;
  const Rational lead = g.leading();
  for (int j = 0; j < g.degree(); ++j) {
    Rational ratio = abs(g.coeff(j) / lead);
    if (ratio > max_ratio) max_ratio = ratio;
  }
  return max_ratio + 1;
}

int count_real_roots(const Polynomial& g, const Rational& a,
                     const Rational& b) {
  if (g.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
  if (!(a < b)) throw std::invalid_argument("count_real_roots: a >= b");
  Polynomial h = deflate_root(deflate_root(g, a), b);
  if (h.degree() == 0) return 0;
  auto chain = sturm_sequence(squarefree_part(h));
  return sign_variations(chain, a) - sign_variations(chain, b);
}

int real_root_count_with_multiplicity(const Polynomial& g) {
  if (g.is_zero())
    throw std::domain_error("real_root_count_with_multiplicity: zero input");
  if (g.degree() == 0) return 0;
  Rational bound = cauchy_root_bound(g);
  auto chain = sturm_sequence(squarefree_part(g));
  int distinct = sign_variations(chain, -bound) - sign_variations(chain, bound);
  Polynomial repeated = poly_gcd(g, g.derivative());
  if (repeated.degree() == 0) return distinct;
  return distinct + real_root_count_with_multiplicity(repeated);
}

RootIsolator::RootIsolator(Polynomial g) : g_(std::move(g)) {
  if (g_.is_zero()) throw std::domain_error("RootIsolator: zero polynomial");
  bound_ = cauchy_root_bound(g_);
  mult_chain_.push_back(g_);
  while (mult_chain_.back().degree() >= 1) {
    const Polynomial& top = mult_chain_.back();
    Polynomial next = poly_gcd(top, top.derivative());
    if (next.degree() == 0) break;
    mult_chain_.push_back(next);
  }
  for (const auto& m : mult_chain_)
    mult_sturm_.push_back(sturm_sequence(squarefree_part(m)));
  isolate();
}

int RootIsolator::count_between(const Rational& lo, const Rational& hi) const {
  return sign_variations(sturm_, lo) - sign_variations(sturm_, hi);
}

// Split point near the middle of (lo, hi) that is not a root of g_; sets
// hit_root when it lands exactly on a root of the square-free part.
Rational RootIsolator::pick_split(const Rational& lo, const Rational& hi,
                                  bool& hit_root) {
  hit_root = false;
  const Rational width = hi - lo;
  for (int den = 2; den <= 64; ++den) {
    for (int num = 1; num < den; ++num) {
      if (3 * num < den || 3 * num > 2 * den) continue;  // stay middle-ish
      Rational cand = lo + width * Rational(num, den);
      if (squarefree_(cand) == 0) {
        hit_root = true;
        return cand;
      }
      if (g_(cand) != 0) return cand;
    }
  }
  throw std::logic_error("pick_split: no split point found");
}

void RootIsolator::isolate() {
  std::vector<std::pair<Rational, Rational>> found;
  for (bool restart = true; restart;) {
    restart = false;
    found.clear();
    squarefree_ = squarefree_part(g_);
    for (const auto& r : exact_roots_) squarefree_ = deflate_root(squarefree_, r);
    sturm_ = sturm_sequence(squarefree_);
    if (squarefree_.degree() == 0) break;
    std::deque<std::pair<Rational, Rational>> work{{-bound_, bound_}};
    while (!work.empty() && !restart) {
      auto [lo, hi] = work.front();
      work.pop_front();
      int n = count_between(lo, hi);
      if (n == 0) continue;
      if (n == 1) {
        found.emplace_back(lo, hi);
        continue;
      }
      bool hit_root = false;
      Rational mid = pick_split(lo, hi, hit_root);
      if (hit_root) {
        exact_roots_.push_back(mid);
        restart = true;
        break;
      }
      work.emplace_back(lo, mid);
      work.emplace_back(mid, hi);
    }
  }

  isolation_.intervals.clear();
  for (const auto& r : exact_roots_) {
    int mult = 0;
    for (const auto& m : mult_chain_)
      if (m(r) == 0) ++mult;
    isolation_.intervals.push_back({r, r, mult});
  }
  for (const auto& [lo, hi] : found)
    isolation_.intervals.push_back({lo, hi, interval_multiplicity(lo, hi)});

  // Refine until entries are pairwise separated (exact points may initially
  // sit inside another root's interval), then sort ascending.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < isolation_.intervals.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < isolation_.intervals.size() && !changed;
           ++j) {
        auto& a = isolation_.intervals[i];
        auto& b = isolation_.intervals[j];
        if (entries_separated(a, b)) continue;
        halve(a);
        halve(b);
        changed = true;
      }
  }
  std::sort(isolation_.intervals.begin(), isolation_.intervals.end(),
            root_before);
}

int RootIsolator::interval_multiplicity(const Rational& lo,
                                        const Rational& hi) const {
  int mult = 1;
  for (std::size_t i = 1; i < mult_sturm_.size(); ++i)
    if (sign_variations(mult_sturm_[i], lo) -
            sign_variations(mult_sturm_[i], hi) ==
        1)
      ++mult;
  return mult;
}

void RootIsolator::halve(RootInterval& iv) {
  if (iv.is_point()) return;
  bool hit_root = false;
  Rational mid = pick_split(iv.lo, iv.hi, hit_root);
  if (hit_root) {
    iv.lo = mid;
    iv.hi = mid;
    return;
  }
  if (sign_variations(sturm_, iv.lo) - sign_variations(sturm_, mid) == 1)
    iv.hi = mid;
  else
    iv.lo = mid;
}

bool RootIsolator::root_is_negative(RootInterval& iv) {
  if (iv.is_point()) return iv.lo < 0;
  while (true) {
    if (iv.hi < 0) return true;
    if (iv.lo >= 0) return false;
    if (iv.hi == 0) return g_(Rational(0)) != 0;  // root in (lo, 0)
    halve(iv);
  }
}

RootIsolation isolate_real_roots(const Polynomial& g) {
  return RootIsolator(g).isolation();
}

namespace {

int total_multiplicity(const RootIsolation& ri) {
  int total = 0;
  for (const auto& iv : ri.intervals) total += iv.multiplicity;
  return total;
}

}  // namespace

InterlacingReport interlacing_check(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero())
    throw std::domain_error("interlacing_check: zero polynomial");

  InterlacingReport rep;
  rep.degree_ok =
      p.degree() == q.degree() || p.degree() == q.degree() + 1;
  rep.coprime = poly_gcd(p, q).degree() == 0;
  rep.sign_condition = p(Rational(0)) * q(Rational(0)) > 0;

  RootIsolator ip(p), iq(q);
  rep.p_roots = ip.isolation();
  rep.q_roots = iq.isolation();

  rep.all_real = total_multiplicity(rep.p_roots) == p.degree() &&
                 total_multiplicity(rep.q_roots) == q.degree();
  rep.all_simple = true;
  for (const auto& iv : rep.p_roots.intervals)
    if (iv.multiplicity != 1) rep.all_simple = false;
  for (const auto& iv : rep.q_roots.intervals)
    if (iv.multiplicity != 1) rep.all_simple = false;

  auto all_negative = [](RootIsolator& iso, RootIsolation& ri) {
    if (iso.polynomial()(Rational(0)) == 0) return false;
    for (auto& iv : ri.intervals)
      if (!iso.root_is_negative(iv)) return false;
    return true;
  };
  bool p_negative = all_negative(ip, rep.p_roots);
  bool q_negative = all_negative(iq, rep.q_roots);
  rep.all_negative = p_negative && q_negative;

  if (rep.coprime) {
    // Refine across the two root sets until every pair is separated, so the
    // merged ordering is exact. Coprimality guarantees termination.
    struct Entry {
      RootInterval* iv;
      bool from_p;
    };
    std::vector<Entry> entries;
    for (auto& iv : rep.p_roots.intervals) entries.push_back({&iv, true});
    for (auto& iv : rep.q_roots.intervals) entries.push_back({&iv, false});
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < entries.size() && !changed; ++i)
        for (std::size_t j = i + 1; j < entries.size() && !changed; ++j) {
          if (entries_separated(*entries[i].iv, *entries[j].iv)) continue;
          (entries[i].from_p ? ip : iq).halve(*entries[i].iv);
          (entries[j].from_p ? ip : iq).halve(*entries[j].iv);
          changed = true;
        }
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) {
                return root_before(*a.iv, *b.iv);
              });
    rep.interlaced = true;
    for (std::size_t i = 1; i < entries.size(); ++i)
      if (entries[i].from_p == entries[i - 1].from_p) rep.interlaced = false;
    if (rep.q_roots.intervals.empty())
      rep.rightmost_is_p = true;
    else if (rep.p_roots.intervals.empty())
      rep.rightmost_is_p = false;
    else
      rep.rightmost_is_p = entries.back().from_p;
  }

  rep.verdict = rep.degree_ok && rep.all_real && rep.all_simple &&
                rep.all_negative && rep.interlaced && rep.rightmost_is_p &&
                rep.sign_condition && rep.coprime;
  return rep;
}

StabilityReport condition_b(const Polynomial& f) {
  if (f.is_zero() || f.degree() < 1)
    throw std::domain_error("condition_b: need a nonzero nonconstant input");
  StabilityReport rep;
  rep.method = Method::HermiteBiehler;
  auto [p, q] = even_odd_split(f);
  if (p.is_zero() || q.is_zero()) {
    // f is (up to the x factor) a polynomial in x^2: roots come in +/- pairs,
    // so it cannot be stable.
    rep.verdict = Verdict::NotStable;
    rep.interlacing = InterlacingReport{};
    return rep;
  }
  rep.interlacing = interlacing_check(p, q);
  rep.verdict =
      rep.interlacing->verdict ? Verdict::Stable : Verdict::NotStable;
  rep.phase_sign = phase_sign(f, Rational(1));
  return rep;
}

std::optional<int> phase_sign(const Polynomial& f, const Rational& z0) {
  if (z0 <= 0) throw std::invalid_argument("phase_sign: need z0 > 0");
  auto [p, q] = even_odd_split(f);
  const Rational schedule[] = {z0,
                               Rational(1),
                               Rational(3, 2),
                               Rational(5, 7),
                               Rational(2),
                               Rational(1, 3),
                               Rational(7, 4),
                               Rational(11, 16)};
  for (const Rational& z : schedule) {
    Rational qv = q(z * z);
    if (qv == 0) continue;
    return sign_of(p(z * z)) * sign_of(qv);
  }
  return std::nullopt;
}

bool combination_real_rooted(const Polynomial& f, const Rational& lambda,
                             const Rational& mu) {
  if (f.is_zero())
    throw std::domain_error("combination_real_rooted: zero polynomial");
  if (lambda == 0 && mu == 0)
    throw std::invalid_argument("combination_real_rooted: zero weights");
  auto [p, q] = even_odd_split(f);
  Polynomial x({Rational(0), Rational(1)});
  Polynomial g = substitute_neg_x_squared(p) * lambda +
                 x * substitute_neg_x_squared(q) * mu;
  if (g.is_zero()) return true;  // degenerate; cannot occur for stable f
  return real_root_count_with_multiplicity(g) == g.degree();
}

}  // namespace hwk
