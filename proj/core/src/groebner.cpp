#include "pfcy/groebner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "pfcy/control.hpp"
#include "pfcy/linalg.hpp"

namespace pfcy {

namespace {

constexpr int kBinomRows = kMaxDegree + kMaxVars + 2;

struct BinomTable {
  std::uint64_t c[kBinomRows][kMaxVars + 1];
  BinomTable() {
    for (int a = 0; a < kBinomRows; ++a)
      for (int b = 0; b <= kMaxVars; ++b) c[a][b] = static_cast<std::uint64_t>(binomial(a, b));
  }
};
const BinomTable& binoms() {
  static const BinomTable t;
  return t;
}

// Monomials of each degree, indexed by their position in the active order
// (position 0 is the largest). Positions are computed through the
// combinatorial rank of a monomial among those of its degree.
class Tables {
 public:
  struct Level {
    std::vector<Monomial> mons;
    std::vector<std::uint32_t> pos_of_rank;  // empty when rank order is the order
  };

  Tables(int n, MonomialOrder order) : n_(n), order_(order), C_(binoms()) {}

  // Rank in ascending lexicographic order of (e_{n-1}, ..., e_1); this is
  // exactly descending degrevlex.
  std::uint32_t rank(Monomial m) const {
    std::uint64_t r = 0;
    int rem = m.degree();
    for (int j = n_ - 1; j >= 1; --j) {
      int e = m.exponent(j);
      r += C_.c[rem + j][j] - C_.c[rem - e + j][j];
      rem -= e;
    }
    return static_cast<std::uint32_t>(r);
  }

  const Level& level(int d) {
    if (d >= static_cast<int>(levels_.size())) levels_.resize(static_cast<std::size_t>(d) + 1);
    auto& slot = levels_[static_cast<std::size_t>(d)];
    if (!slot) {
      slot = std::make_unique<Level>();
      auto mons = monomials_of_degree(n_, d, MonomialOrder::degrevlex());
      if (order_.kind() == MonomialOrder::Kind::DegRevLex) {
        slot->mons.resize(mons.size());
        for (Monomial m : mons) slot->mons[rank(m)] = m;
      } else {
        std::sort(mons.begin(), mons.end(), [&](Monomial a, Monomial b) { return order_.greater(a, b); });
        slot->pos_of_rank.resize(mons.size());
        for (std::size_t i = 0; i < mons.size(); ++i) slot->pos_of_rank[rank(mons[i])] = static_cast<std::uint32_t>(i);
        slot->mons = std::move(mons);
      }
    }
    return *slot;
  }

  std::uint32_t pos(Monomial m) {
    std::uint32_t r = rank(m);
    const Level& L = level(m.degree());
    return L.pos_of_rank.empty() ? r : L.pos_of_rank[r];
  }

 private:
  int n_;
  MonomialOrder order_;
  const BinomTable& C_;
  std::vector<std::unique_ptr<Level>> levels_;
};

struct Elem {
  std::vector<Monomial> mons;
  std::vector<std::uint32_t> coefs;
  Monomial lm() const { return mons.front(); }
  int deg() const { return mons.front().degree(); }
};

struct Pair {
  std::uint32_t i, j;
  Monomial lcm;
  int deg;
  bool alive = true;
};

class Engine {
 public:
  Engine(const PrimeField& f, int n, MonomialOrder order)
      : f_(f), p_(f.characteristic()), n_(n), order_(order), T_(n, order) {}

  GroebnerBasis run(const std::vector<Polynomial>& gens, const GroebnerOptions& opt) {
    std::vector<std::pair<int, std::size_t>> inputs;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto& g = gens[k];
      if (g.field() != f_ || g.nvars() != n_) throw RingMismatch("generators live in different rings");
      if (g.is_zero()) continue;
      if (!g.is_homogeneous()) throw std::invalid_argument("Groebner bases are computed for homogeneous generators only");
      inputs.push_back({g.degree(), k});
    }
    std::stable_sort(inputs.begin(), inputs.end());
    std::size_t next_input = 0;

    GroebnerBasis out;
    out.field = f_;
    out.nvars = n_;
    out.order = order_;

    for (;;) {
      int d = -1;
      if (next_input < inputs.size()) d = inputs[next_input].first;
      for (const auto& q : pending_)
        if (d < 0 || q.deg < d) d = q.deg;
      if (d < 0) break;
      if (opt.max_degree >= 0 && d > opt.max_degree) {
        out.truncated = true;
        break;
      }
      begin_degree(d);
      std::size_t first_new = G_.size();

      // S-pairs of this degree, smallest lcm first.
      std::vector<Pair> batch;
      {
        std::vector<Pair> rest;
        for (auto& q : pending_) (q.deg == d ? batch : rest).push_back(q);
        pending_.swap(rest);
      }
      std::vector<std::uint32_t> bpos(batch.size());
      for (std::size_t k = 0; k < batch.size(); ++k) bpos[k] = T_.pos(batch[k].lcm);
      std::vector<std::size_t> idx(batch.size());
      for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (bpos[a] != bpos[b]) return bpos[a] > bpos[b];
        if (batch[a].i != batch[b].i) return batch[a].i < batch[b].i;
        return batch[a].j < batch[b].j;
      });
      batch_ = &batch;
      for (std::size_t k : idx) {
        if (!batch[k].alive) continue;
        control::check();
        const Pair q = batch[k];
        batch[k].alive = false;
        load_spair(q);
        auto r = reduce_all();
        if (!r.empty()) add_element(make_elem(r));
        ++spairs_done_;
        if ((spairs_done_ & 1023) == 0) beat(d);
      }
      batch_ = nullptr;

      while (next_input < inputs.size() && inputs[next_input].first == d) {
        control::check();
        const Polynomial& g = gens[inputs[next_input].second];
        for (const auto& t : g.terms()) add_term(t.mono, t.coeff);
        auto r = reduce_all();
        if (!r.empty()) {
          add_element(make_elem(r));
          out.minimal_input.push_back(inputs[next_input].second);
        }
        ++next_input;
      }

      // Tail-reduce the elements born in this degree against each other.
      for (std::size_t k = first_new; k < G_.size(); ++k) {
        Elem& h = G_[k];
        for (std::size_t t = 1; t < h.mons.size(); ++t) add_term(h.mons[t], h.coefs[t]);
        auto r = reduce_all();
        h.mons.resize(1);
        h.coefs.resize(1);
        for (const auto& [pos, c] : r) {
          h.mons.push_back(cur_level_->mons[pos]);
          h.coefs.push_back(c);
        }
      }
      beat(d);
    }

    std::sort(out.minimal_input.begin(), out.minimal_input.end());
    for (const auto& e : G_) {
      std::vector<Polynomial::Term> terms;
      terms.reserve(e.mons.size());
      for (std::size_t t = 0; t < e.mons.size(); ++t) terms.push_back({e.mons[t], e.coefs[t]});
      out.elements.push_back(Polynomial::from_terms(f_, n_, order_, std::move(terms)));
    }
    return out;
  }

 private:
  void beat(int d) {
    std::ostringstream os;
    os << "groebner: degree " << d << ", basis " << G_.size() << ", pending pairs " << pending_.size()
       << ", reductions " << spairs_done_;
    control::heartbeat(os.str());
  }

  void begin_degree(int d) {
    if (cur_deg_ >= 0) {
      prev_red_.swap(red_);
      prev_deg_ = cur_deg_;
    }
    cur_level_ = &T_.level(d);
    const std::size_t N = cur_level_->mons.size();
    std::vector<std::int32_t> red(N, -1);
    if (prev_deg_ == d - 1 && d > 0) {
      for (std::size_t pos = 0; pos < N; ++pos) {
        Monomial m = cur_level_->mons[pos];
        for (int i = 0; i < n_; ++i) {
          if (!m.exponent(i)) continue;
          std::int32_t r = prev_red_[T_.pos(m / Monomial::variable(i))];
          if (r >= 0) {
            red[pos] = r;
            break;
          }
        }
      }
    } else {
      for (std::size_t pos = 0; pos < N; ++pos) {
        Monomial m = cur_level_->mons[pos];
        for (std::size_t g = 0; g < G_.size(); ++g)
          if (G_[g].lm().divides(m)) {
            red[pos] = static_cast<std::int32_t>(g);
            break;
          }
      }
    }
    red_.swap(red);
    acc_.assign(N, 0);
    mark_.assign(N, 0);
    cur_deg_ = d;
  }

  void add_term(Monomial m, std::uint64_t c) {
    std::uint32_t pos = T_.pos(m);
    if (!mark_[pos]) {
      mark_[pos] = 1;
      heap_.push(pos);
    }
    acc_[pos] += c;
  }

  void load_spair(const Pair& q) {
    const Elem& a = G_[q.i];
    const Elem& b = G_[q.j];
    Monomial ua = q.lcm / a.lm(), ub = q.lcm / b.lm();
    for (std::size_t t = 1; t < a.mons.size(); ++t) add_term(ua * a.mons[t], a.coefs[t]);
    for (std::size_t t = 1; t < b.mons.size(); ++t) add_term(ub * b.mons[t], p_ - b.coefs[t]);
  }

  // Fully reduces the accumulator; returns the surviving (position, coeff)
  // terms in decreasing monomial order and leaves the accumulator empty.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> reduce_all() {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> result;
    while (!heap_.empty()) {
      std::uint32_t pos = heap_.top();
      heap_.pop();
      mark_[pos] = 0;
      std::uint64_t c = acc_[pos] % p_;
      acc_[pos] = 0;
      if (!c) continue;
      std::int32_t r = red_[pos];
      if (r < 0) {
        result.push_back({pos, static_cast<std::uint32_t>(c)});
        continue;
      }
      const Elem& g = G_[static_cast<std::size_t>(r)];
      Monomial u = cur_level_->mons[pos] / g.lm();
      std::uint64_t fac = p_ - c;
      for (std::size_t t = 1; t < g.mons.size(); ++t) add_term(u * g.mons[t], fac * g.coefs[t]);
    }
    return result;
  }

  Elem make_elem(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& r) {
    Elem e;
    std::uint32_t inv = f_.inv(r.front().second);
    for (const auto& [pos, c] : r) {
      e.mons.push_back(cur_level_->mons[pos]);
      e.coefs.push_back(f_.mul(c, inv));
    }
    return e;
  }

  void add_element(Elem h) {
    const auto t = static_cast<std::uint32_t>(G_.size());
    const Monomial lh = h.lm();
    red_[T_.pos(lh)] = static_cast<std::int32_t>(t);
    G_.push_back(std::move(h));

    auto killed = [&](const Pair& q) {
      if (!lh.divides(q.lcm)) return false;
      return G_[q.i].lm().lcm(lh) != q.lcm && G_[q.j].lm().lcm(lh) != q.lcm;
    };
    pending_.erase(std::remove_if(pending_.begin(), pending_.end(), killed), pending_.end());
    if (batch_)
      for (auto& q : *batch_)
        if (q.alive && killed(q)) q.alive = false;

    struct Cand {
      std::uint32_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(t);
    for (std::uint32_t g = 0; g < t; ++g) {
      Monomial lg = G_[g].lm();
      cands.push_back({g, lg.lcm(lh), lg.coprime(lh)});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.lcm.degree() < b.lcm.degree(); });
    // Criterion M: drop candidates whose lcm is properly divisible by another's.
    std::vector<Cand> surv;
    for (std::size_t k = 0; k < cands.size();) {
      std::size_t e = k;
      while (e < cands.size() && cands[e].lcm.degree() == cands[k].lcm.degree()) ++e;
      std::size_t lower = surv.size();
      for (std::size_t a = k; a < e; ++a) {
        bool drop = false;
        for (std::size_t s = 0; s < lower; ++s)
          if (surv[s].lcm.divides(cands[a].lcm)) {
            drop = true;
            break;
          }
        if (!drop) surv.push_back(cands[a]);
      }
      k = e;
    }
    // Criterion F and the product criterion: one pair per lcm, none if any
    // pair with that lcm has coprime leading monomials.
    std::map<std::uint64_t, std::pair<std::uint32_t, bool>> by_lcm;
    for (const auto& c : surv) {
      auto it = by_lcm.find(c.lcm.bits());
      if (it == by_lcm.end()) by_lcm.emplace(c.lcm.bits(), std::make_pair(c.g, c.coprime));
      else {
        it->second.second = it->second.second || c.coprime;
        it->second.first = std::min(it->second.first, c.g);
      }
    }
    for (const auto& [bits, v] : by_lcm) {
      if (v.second) continue;
      Monomial l = Monomial::from_bits(bits);
      pending_.push_back({v.first, t, l, l.degree(), true});
    }
  }

  PrimeField f_;
  std::uint64_t p_;
  int n_;
  MonomialOrder order_;
  Tables T_;
  std::vector<Elem> G_;
  std::vector<Pair> pending_;
  std::vector<Pair>* batch_ = nullptr;

  const Tables::Level* cur_level_ = nullptr;
  int cur_deg_ = -1;
  int prev_deg_ = -1;
  std::vector<std::int32_t> red_, prev_red_;
  std::vector<std::uint64_t> acc_;
  std::vector<std::uint8_t> mark_;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
  std::uint64_t spairs_done_ = 0;
};

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.leading_monomial());
  return out;
}

GroebnerBasis buchberger(const PrimeField& field, int nvars, const MonomialOrder& order,
                         const std::vector<Polynomial>& gens, const GroebnerOptions& options) {
  Engine e(field, nvars, order);
  return e.run(gens, options);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const GroebnerOptions& options) {
  if (gens.empty()) throw std::invalid_argument("ring unknown for an empty generator list");
  for (const auto& g : gens)
    if (g.order() != gens.front().order()) throw RingMismatch("generators use different monomial orders");
  return buchberger(gens.front().field(), gens.front().nvars(), gens.front().order(), gens, options);
}

GradedIdeal::GradedIdeal(const PrimeField& field, int nvars, std::vector<Polynomial> gens, MonomialOrder order,
                         bool saturated)
    : field_(field), nvars_(nvars), order_(order), saturated_(saturated), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.field() != field || g.nvars() != nvars) throw RingMismatch("generator outside the ring of the ideal");
    if (!g.is_homogeneous()) throw std::invalid_argument("generators must be homogeneous");
    if (!g.is_zero()) gens_.push_back(g.order() == order ? std::move(g) : g.with_order(order));
  }
}

GradedIdeal GradedIdeal::with_basis(std::vector<Polynomial> gens, GroebnerBasis basis, bool saturated) {
  GradedIdeal I(basis.field, basis.nvars, std::move(gens), basis.order, saturated);
  I.cache_->gb = std::make_shared<const GroebnerBasis>(std::move(basis));
  return I;
}

GradedIdeal GradedIdeal::with_saturated_flag(bool s) const {
  GradedIdeal I = *this;
  I.saturated_ = s;
  return I;
}

const GroebnerBasis& GradedIdeal::basis() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gb) cache_->gb = std::make_shared<const GroebnerBasis>(buchberger(field_, nvars_, order_, gens_));
  return *cache_->gb;
}

bool GradedIdeal::has_basis() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return static_cast<bool>(cache_->gb);
}

Reducer::Reducer(const GroebnerBasis& gb) : gb_(&gb), lms_(gb.leading_monomials()) {}

Polynomial Reducer::reduce(const Polynomial& p) const {
  const auto& f = gb_->field;
  if (p.field() != f || p.nvars() != gb_->nvars) throw RingMismatch("polynomial and basis live in different rings");
  const MonomialOrder order = gb_->order;
  auto cmp = [&order](Monomial a, Monomial b) { return order.greater(a, b); };
  std::map<Monomial, std::uint32_t, decltype(cmp)> work(cmp);
  for (const auto& t : p.terms()) work[t.mono] = t.coeff;
  std::vector<Polynomial::Term> rest;
  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = it->first;
    std::uint32_t c = it->second;
    work.erase(it);
    if (!c) continue;
    std::size_t k = 0;
    for (; k < lms_.size(); ++k)
      if (lms_[k].divides(m)) break;
    if (k == lms_.size()) {
      rest.push_back({m, c});
      continue;
    }
    const auto& g = gb_->elements[k];
    Monomial u = m / lms_[k];
    std::uint32_t fac = f.neg(c);
    for (std::size_t t = 1; t < g.terms().size(); ++t) {
      const auto& gt = g.terms()[t];
      auto& slot = work[u * gt.mono];
      slot = f.add(slot, f.mul(fac, gt.coeff));
    }
  }
  return Polynomial::from_terms(f, gb_->nvars, order, std::move(rest)).with_order(p.order());
}

Polynomial normal_form(const Polynomial& p, const GradedIdeal& I) {
  if (p.order() != I.order()) throw RingMismatch("polynomial and ideal use different monomial orders");
  return Reducer(I.basis()).reduce(p);
}

bool ideal_contains(const GradedIdeal& I, const Polynomial& p) { return Reducer(I.basis()).reduces_to_zero(p); }

HilbertData hilbert_data(const GroebnerBasis& gb) {
  if (gb.truncated) throw std::invalid_argument("Hilbert series needs a complete Groebner basis");
  return HilbertData::from_numerator(hilbert_numerator(gb.leading_monomials(), gb.nvars), gb.nvars);
}

HilbertData hilbert_data(const GradedIdeal& I) { return hilbert_data(I.basis()); }

std::uint64_t graded_piece_dim(const GradedIdeal& I, int k) {
  if (k < 0) return 0;
  auto h = hilbert_data(I);
  return monomial_count(I.nvars(), k) - static_cast<std::uint64_t>(h.hf(k));
}

std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  if (nz.empty()) return {};
  auto gb = buchberger(nz);
  std::vector<Polynomial> out;
  for (auto k : gb.minimal_input) out.push_back(nz[k]);
  return out;
}

std::vector<Polynomial> change_coordinates(const std::vector<Polynomial>& gens,
                                           const std::vector<std::vector<PrimeField::Element>>& g) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& p : gens) out.push_back(substitute_linear(p, g));
  return out;
}

GradedIdeal saturate(const GradedIdeal& I, std::uint64_t seed) {
  const int n = I.nvars();
  const auto& F = I.field();
  if (I.generators().empty()) return I.with_saturated_flag(true);
  SplitMix64 rng(seed);
  ModMatrix g = ModMatrix::random_invertible(F, static_cast<std::size_t>(n), rng);
  ModMatrix ginv = *g.inverse();

  std::vector<Polynomial> moved;
  for (const auto& p : change_coordinates(I.generators(), g.to_rows()))
    moved.push_back(p.with_order(MonomialOrder::degrevlex()));
  auto gb = buchberger(F, n, MonomialOrder::degrevlex(), moved);

  std::vector<Polynomial> divided;
  for (const auto& e : gb.elements) {
    int k = e.leading_monomial().exponent(n - 1);
    divided.push_back(k ? e.divide_by_monomial(Monomial::variable(n - 1, k)) : e);
  }
  std::vector<Polynomial> back;
  for (const auto& p : change_coordinates(divided, ginv.to_rows())) back.push_back(p.with_order(I.order()));
  auto sat = buchberger(F, n, I.order(), back);
  std::vector<Polynomial> mins;
  for (auto k : sat.minimal_input) mins.push_back(back[k]);
  for (std::size_t k = 0; k < mins.size(); ++k) sat.minimal_input[k] = k;
  return GradedIdeal::with_basis(std::move(mins), std::move(sat), true);
}

}  // namespace pfcy
