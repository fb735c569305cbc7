#pragma once

// Template bodies for polynomial.hpp.

namespace pfcy {

namespace detail {

template <class F>
class PolyParser {
 public:
  PolyParser(const std::string& s, const F& f, int n, MonomialOrder o, std::vector<std::string> names)
      : s_(s), f_(f), n_(n), o_(o), names_(std::move(names)) {}

  Poly<F> run() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty polynomial");
    Poly<F> r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly<F> expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Poly<F> r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) r = r + term();
      else if (eat('-')) r = r - term();
      else break;
    }
    return r;
  }
  Poly<F> term() {
    Poly<F> r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }
  Poly<F> factor() {
    Poly<F> base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 3) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }
  Poly<F> atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly<F> r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num = s_.substr(start, pos_ - start);
      std::string den = "1";
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t d0 = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (d0 == pos_) fail("expected denominator");
        den = s_.substr(d0, pos_ - d0);
      }
      mpz_class nz(num), dz(den);
      if (dz == 0) fail("zero denominator");
      mpq_class q(nz, dz);
      q.canonicalize();
      return Poly<F>::constant(f_, n_, f_.from_rational(q), o_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      for (int i = 0; i < n_; ++i)
        if (names_[static_cast<std::size_t>(i)] == name) return Poly<F>::variable(f_, n_, i, o_);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character");
  }

  const std::string& s_;
  const F& f_;
  int n_;
  MonomialOrder o_;
  std::vector<std::string> names_;
  std::size_t pos_ = 0;
};

// Substitution x_i -> x_i + c x_j applied to every term.
template <class F>
Poly<F> apply_transvection(const Poly<F>& p, int i, int j, const typename F::Element& c) {
  using Term = typename Poly<F>::Term;
  const F& f = p.field();
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    int e = t.mono.exponent(i);
    if (e == 0) {
      out.push_back(t);
      continue;
    }
    Monomial rest = t.mono / Monomial::variable(i, e);
    // (x_i + c x_j)^e = sum_k C(e,k) c^k x_j^k x_i^(e-k)
    typename F::Element binom = f.one(), cpow = f.one();
    for (int k = 0; k <= e; ++k) {
      typename F::Element coeff = f.mul(t.coeff, f.mul(binom, cpow));
      if (!f.is_zero(coeff)) {
        Monomial m = rest;
        if (e - k) m = m * Monomial::variable(i, e - k);
        if (k) m = m * Monomial::variable(j, k);
        out.push_back({m, coeff});
      }
      std::int64_t b = 1;  // C(e, k+1)
      for (int q = 0; q < k + 1; ++q) b = b * (e - q) / (q + 1);
      binom = f.from_int(b);
      cpow = f.mul(cpow, c);
    }
  }
  return Poly<F>::from_terms(f, p.nvars(), p.order(), std::move(out));
}

template <class F>
Poly<F> apply_scaling(const Poly<F>& p, int i, const typename F::Element& s) {
  using Term = typename Poly<F>::Term;
  const F& f = p.field();
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    auto c = f.mul(t.coeff, f.pow(s, static_cast<std::uint64_t>(t.mono.exponent(i))));
    out.push_back({t.mono, c});
  }
  return Poly<F>::from_terms(f, p.nvars(), p.order(), std::move(out));
}

template <class F>
Poly<F> apply_swap(const Poly<F>& p, int a, int b) {
  using Term = typename Poly<F>::Term;
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    auto e = t.mono.exponents();
    std::swap(e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)]);
    out.push_back({Monomial::from_exponents(std::vector<int>(e.begin(), e.begin() + p.nvars())), t.coeff});
  }
  return Poly<F>::from_terms(p.field(), p.nvars(), p.order(), std::move(out));
}

}  // namespace detail

template <class F>
Poly<F> parse_polynomial(const std::string& text, const F& field, int nvars, MonomialOrder order,
                         const std::vector<std::string>& names_in) {
  auto names = names_in.empty() ? default_variable_names(nvars) : names_in;
  if (static_cast<int>(names.size()) != nvars) throw std::invalid_argument("variable name list has wrong length");
  return detail::PolyParser<F>(text, field, nvars, order, std::move(names)).run();
}

template <class F>
Poly<F> substitute_linear(const Poly<F>& p, const std::vector<std::vector<typename F::Element>>& L) {
  using E = typename F::Element;
  const F& f = p.field();
  const int n = p.nvars();
  if (static_cast<int>(L.size()) != n) throw std::invalid_argument("substitution matrix needs one row per variable");
  const int m = n == 0 ? 0 : static_cast<int>(L[0].size());
  for (const auto& row : L)
    if (static_cast<int>(row.size()) != m) throw std::invalid_argument("ragged substitution matrix");
  if (m > n) throw std::invalid_argument("substitution into more variables than the source ring is unsupported");

  // Complete L to an invertible n x n matrix with unit columns, Gauss-Jordan it
  // to the identity by row operations E_k...E_1 A = I, and apply the inverse
  // elementary substitutions E_1^{-1}, ..., E_k^{-1} in turn.
  std::vector<std::vector<E>> A(static_cast<std::size_t>(n), std::vector<E>(static_cast<std::size_t>(n), f.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) A[i][j] = L[i][j];
  {
    // rank check and completion on a scratch copy
    std::vector<std::vector<E>> R = L;
    int rank = 0;
    for (int j = 0; j < m; ++j) {
      int piv = -1;
      for (int r = rank; r < n; ++r)
        if (!f.is_zero(R[r][j])) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::invalid_argument("substitution matrix is rank deficient");
      std::swap(R[rank], R[piv]);
      E inv = f.inv(R[rank][j]);
      for (int r = 0; r < n; ++r) {
        if (r == rank || f.is_zero(R[r][j])) continue;
        E fac = f.mul(R[r][j], inv);
        for (int c = 0; c < m; ++c) R[r][c] = f.sub(R[r][c], f.mul(fac, R[rank][c]));
      }
      ++rank;
    }
    // Unit vectors spanning a complement: try e_0, e_1, ... greedily.
    int col = m;
    std::vector<std::vector<E>> cols;
    for (int j = 0; j < m; ++j) {
      std::vector<E> c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) c[i] = L[i][j];
      cols.push_back(c);
    }
    auto independent = [&](const std::vector<std::vector<E>>& vs) {
      std::vector<std::vector<E>> M = vs;
      int rk = 0;
      const int k = static_cast<int>(M.size());
      for (int j = 0; j < n && rk < k; ++j) {
        int piv = -1;
        for (int r = rk; r < k; ++r)
          if (!f.is_zero(M[r][j])) {
            piv = r;
            break;
          }
        if (piv < 0) continue;
        std::swap(M[rk], M[piv]);
        E inv = f.inv(M[rk][j]);
        for (int r = rk + 1; r < k; ++r) {
          if (f.is_zero(M[r][j])) continue;
          E fac = f.mul(M[r][j], inv);
          for (int c = 0; c < n; ++c) M[r][c] = f.sub(M[r][c], f.mul(fac, M[rk][c]));
        }
        ++rk;
      }
      return rk == k;
    };
    for (int u = 0; u < n && col < n; ++u) {
      std::vector<E> e(static_cast<std::size_t>(n), f.zero());
      e[u] = f.one();
      cols.push_back(e);
      if (independent(cols)) {
        for (int i = 0; i < n; ++i) A[i][col] = e[i];
        ++col;
      } else {
        cols.pop_back();
      }
    }
  }

  Poly<F> q = p;
  for (int j = 0; j < n; ++j) {
    int piv = -1;
    for (int r = j; r < n; ++r)
      if (!f.is_zero(A[r][j])) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::invalid_argument("substitution matrix is rank deficient");
    if (piv != j) {
      std::swap(A[piv], A[j]);
      q = detail::apply_swap(q, piv, j);
    }
    E s = A[j][j];
    if (!f.is_one(s)) {
      E inv = f.inv(s);
      for (auto& v : A[j]) v = f.mul(v, inv);
      q = detail::apply_scaling(q, j, s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == j || f.is_zero(A[r][j])) continue;
      E c = A[r][j];
      for (int k = 0; k < n; ++k) A[r][k] = f.sub(A[r][k], f.mul(c, A[j][k]));
      q = detail::apply_transvection(q, r, j, c);
    }
  }
  if (m == n) return q;
  std::vector<typename Poly<F>::Term> kept;
  for (const auto& t : q.terms()) {
    bool ok = true;
    for (int v = m; v < n; ++v)
      if (t.mono.exponent(v)) ok = false;
    if (ok) kept.push_back(t);
  }
  return Poly<F>::from_terms(f, m, p.order(), std::move(kept));
}

}  // namespace pfcy
