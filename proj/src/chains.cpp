#include "tknots/chains.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "tknots/checked.hpp"

namespace tknots {

const char* theory_name(Theory t) {
  switch (t) {
    case Theory::SB: return "sb";
    case Theory::LB: return "lb";
    case Theory::N: return "n";
  }
  return "?";
}

Theory parse_theory(const std::string& s) {
  if (s == "sb" || s == "SB") return Theory::SB;
  if (s == "lb" || s == "LB") return Theory::LB;
  if (s == "n" || s == "N") return Theory::N;
  throw InputError("unknown theory '" + s + "' (expected sb, lb or n)");
}

bool Generator::degenerate() const {
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] == word[i + 1]) return true;
  return false;
}

void FormalChain::add(int64_t index, int64_t coeff) {
  if (modulus > 0) coeff = checked::mod(coeff, modulus);
  if (coeff == 0) return;
  auto [it, fresh] = terms.emplace(index, coeff);
  if (fresh) return;
  it->second = checked::add(it->second, coeff);
  if (modulus > 0) it->second %= modulus;
  if (it->second == 0) terms.erase(it);
}

FormalChain& FormalChain::operator+=(const FormalChain& other) {
  if (other.degree != degree && !other.terms.empty() && !terms.empty())
    throw ContractError("adding chains of different degrees");
  if (terms.empty()) degree = other.degree;
  for (auto [i, c] : other.terms) add(i, c);
  return *this;
}

// ---------------------------------------------------------------- ChainTheory

ChainTheory ChainTheory::shadow(const ShadowBiquandle& sb, int cap, int jobs) {
  ChainTheory t;
  t.theory_ = Theory::SB;
  t.cap_ = cap;
  t.base_size_ = sb.bset_size();
  t.letter_size_ = sb.biquandle_size();
  t.sb_ = std::make_shared<const ShadowBiquandle>(sb);
  t.build(jobs);
  return t;
}

ChainTheory ChainTheory::local(const HorizontalTribracket& tri, int cap, int jobs) {
  ChainTheory t;
  t.theory_ = Theory::LB;
  t.cap_ = cap;
  t.base_size_ = tri.size();
  t.letter_size_ = tri.size();
  t.tri_ = std::make_shared<const HorizontalTribracket>(tri);
  t.build(jobs);
  return t;
}

void ChainTheory::check_degree(int n, int lo) const {
  if (n < lo || n > cap_)
    throw ContractError("degree " + std::to_string(n) + " outside the computed range " +
                        std::to_string(lo) + ".." + std::to_string(cap_));
}

int64_t ChainTheory::basis_size(int n) const {
  if (n == 0) return 0;
  check_degree(n, 1);
  int64_t s = checked::mul(base_size_, letter_size_);
  for (int i = 1; i < n; ++i) s = checked::mul(s, letter_size_ - 1);
  return s;
}

int64_t ChainTheory::index(const Generator& g) const {
  const int n = g.degree();
  check_degree(n, 1);
  if (g.degenerate()) return -1;
  const int q = letter_size_;
  int64_t idx = g.word[0];
  for (int i = 1; i < n; ++i) {
    const int a = g.word[i];
    idx = idx * (q - 1) + (a < g.word[i - 1] ? a : a - 1);
  }
  return g.base * (basis_size(n) / base_size_) + idx;
}

Generator ChainTheory::generator(int n, int64_t index) const {
  const int64_t per_base = basis_size(n) / base_size_;
  if (index < 0 || index >= basis_size(n)) throw ContractError("generator index out of range");
  Generator g;
  g.base = static_cast<int>(index / per_base);
  int64_t rest = index % per_base;
  const int q = letter_size_;
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 1; --i) {
    digits[i] = static_cast<int>(rest % (q - 1));
    rest /= q - 1;
  }
  digits[0] = static_cast<int>(rest);
  g.word.resize(n);
  g.word[0] = digits[0];
  for (int i = 1; i < n; ++i) g.word[i] = digits[i] < g.word[i - 1] ? digits[i] : digits[i] + 1;
  return g;
}

std::vector<std::pair<Generator, int>> ChainTheory::raw_boundary(const Generator& g) const {
  const int n = g.degree();
  std::vector<std::pair<Generator, int>> out;
  if (n <= 1) return out;
  for (int i = 1; i <= n; ++i) {
    const int sign = (i % 2 == 0) ? 1 : -1;
    Generator face{g.base, {}};
    for (int j = 1; j <= n; ++j)
      if (j != i) face.word.push_back(g.word[j - 1]);
    out.emplace_back(std::move(face), sign);

    Generator moved;
    const int pivot = g.word[i - 1];
    if (theory_ == Theory::SB) {
      const ShadowBiquandle& sb = *sb_;
      moved.base = sb.act(g.base, pivot);
      for (int j = 1; j <= n; ++j) {
        const int a = g.word[j - 1];
        if (j < i) moved.word.push_back(sb.under(a, pivot));
        if (j > i) moved.word.push_back(sb.over(a, pivot));
      }
    } else {
      const HorizontalTribracket& t = *tri_;
      moved.base = pivot;
      for (int j = 1; j <= n; ++j) {
        const int y = g.word[j - 1];
        if (j < i) moved.word.push_back(t(g.base, y, pivot));
        if (j > i) moved.word.push_back(t(g.base, pivot, y));
      }
    }
    out.emplace_back(std::move(moved), -sign);
  }
  return out;
}

FormalChain ChainTheory::boundary(const Generator& g) const {
  check_degree(g.degree(), 1);
  FormalChain c;
  c.degree = g.degree() - 1;
  for (const auto& [term, sign] : raw_boundary(g)) {
    const int64_t idx = index(term);
    if (idx >= 0) c.add(idx, sign);
  }
  return c;
}

FormalChain ChainTheory::boundary(const FormalChain& chain) const {
  check_degree(chain.degree, 1);
  FormalChain out;
  out.degree = chain.degree - 1;
  out.modulus = chain.modulus;
  const SparseMatrix& d = boundary_matrix(chain.degree);
  for (auto [j, coeff] : chain.terms)
    for (auto [i, v] : d.columns[j]) out.add(i, checked::mul(coeff, v));
  return out;
}

const SparseMatrix& ChainTheory::boundary_matrix(int n) const {
  check_degree(n, 1);
  return boundaries_[n];
}

FormalChain ChainTheory::chain_of(const Generator& g, int64_t coeff, int64_t modulus) const {
  FormalChain c;
  c.degree = g.degree();
  c.modulus = modulus;
  const int64_t idx = index(g);
  if (idx >= 0) c.add(idx, coeff);
  return c;
}

void ChainTheory::build(int jobs) {
  if (cap_ < 1) throw ContractError("degree cap must be at least 1");
  boundaries_.assign(cap_ + 1, SparseMatrix());
  boundaries_[1] = SparseMatrix(0, static_cast<int>(basis_size(1)));
  jobs = std::max(1, jobs);
  for (int n = 2; n <= cap_; ++n) {
    const int64_t cols = basis_size(n);
    SparseMatrix m(static_cast<int>(basis_size(n - 1)), static_cast<int>(cols));
    auto fill = [&](int64_t lo, int64_t hi) {
      for (int64_t j = lo; j < hi; ++j) {
        const FormalChain c = boundary(generator(n, j));
        auto& col = m.columns[j];
        for (auto [i, v] : c.terms) col.emplace_back(static_cast<int>(i), v);
      }
    };
    if (jobs == 1 || cols < 256) {
      fill(0, cols);
    } else {
      // Columns are independent; each thread owns a contiguous block.
      std::vector<std::thread> pool;
      const int64_t step = (cols + jobs - 1) / jobs;
      for (int64_t lo = 0; lo < cols; lo += step) pool.emplace_back(fill, lo, std::min(cols, lo + step));
      for (auto& th : pool) th.join();
    }
    boundaries_[n] = std::move(m);
  }
}

// ---------------------------------------------------------------- mu / eta

Generator mu(const ShadowBiquandle& sb, const Generator& g) {
  if (!sb.strongly_connected()) throw ContractError("mu needs a strongly connected shadow biquandle");
  Generator out{g.base, {}};
  for (int a : g.word) out.word.push_back(sb.act(g.base, a));
  return out;
}

Generator eta(const ShadowBiquandle& sb, const Generator& g) {
  if (!sb.strongly_connected()) throw ContractError("eta needs a strongly connected shadow biquandle");
  Generator out{g.base, {}};
  for (int y : g.word) out.word.push_back(sb.searrow(g.base, y));
  return out;
}

namespace {

FormalChain transfer(const ChainTheory& from, const ChainTheory& to, const FormalChain& c,
                     bool forward) {
  const ShadowBiquandle* sb =
      from.theory() == Theory::SB ? from.shadow_biquandle() : to.shadow_biquandle();
  if (!sb) throw ContractError("chain transfer needs a shadow-biquandle theory");
  FormalChain out;
  out.degree = c.degree;
  out.modulus = c.modulus;
  for (auto [i, coeff] : c.terms) {
    const Generator g = from.generator(c.degree, i);
    const Generator h = forward ? mu(*sb, g) : eta(*sb, g);
    const int64_t j = to.index(h);
    if (j >= 0) out.add(j, coeff);
  }
  return out;
}

}  // namespace

FormalChain mu(const ChainTheory& sb_theory, const ChainTheory& lb_theory, const FormalChain& c) {
  if (sb_theory.theory() != Theory::SB || lb_theory.theory() != Theory::LB)
    throw ContractError("mu maps SB chains to LB chains");
  return transfer(sb_theory, lb_theory, c, true);
}

FormalChain eta(const ChainTheory& lb_theory, const ChainTheory& sb_theory, const FormalChain& c) {
  if (sb_theory.theory() != Theory::SB || lb_theory.theory() != Theory::LB)
    throw ContractError("eta maps LB chains to SB chains");
  return transfer(lb_theory, sb_theory, c, false);
}

// ---------------------------------------------------------------- homology

namespace {

std::vector<std::pair<int64_t, int>> factorize(int64_t m) {
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

// Exponent of p in the product of the given orders.
int64_t valuation_of_product(const std::vector<int64_t>& orders, int64_t p) {
  int64_t e = 0;
  for (int64_t o : orders)
    while (o % p == 0) {
      o /= p;
      ++e;
    }
  return e;
}

std::vector<int64_t> column_span_orders(const SparseMatrix& d, int64_t m) {
  std::vector<ModVector> rows;
  rows.reserve(d.cols);
  for (const auto& col : d.columns) {
    ModVector v(d.rows, 0);
    for (auto [i, x] : col) v[i] = checked::mod(x, m);
    rows.push_back(std::move(v));
  }
  return HowellForm(std::move(rows), d.rows, m).row_orders();
}

}  // namespace

HomologyGroup homology(const ChainTheory& theory, int n, int64_t modulus) {
  if (n < 1 || n + 1 > theory.cap())
    throw ContractError("homology degree " + std::to_string(n) + " needs boundaries up to " +
                        std::to_string(n + 1) + " (cap " + std::to_string(theory.cap()) + ")");
  if (modulus < 0 || modulus == 1) throw InputError("coefficient modulus must be 0 (integers) or >= 2");

  const auto dn = elementary_divisors(theory.boundary_matrix(n));
  const auto dn1 = elementary_divisors(theory.boundary_matrix(n + 1));
  const int64_t cn = theory.basis_size(n);

  HomologyGroup h;
  h.degree = n;
  h.modulus = modulus;
  if (modulus == 0) {
    h.free_rank = static_cast<int>(cn - dn.rank - dn1.rank);
    h.torsion = dn1.divisors;
    return h;
  }

  // Universal coefficients: H_n(C; Z_m) = H_n (x) Z_m + Tor(H_{n-1}, Z_m).
  std::vector<int64_t> factors;
  const int free_n = static_cast<int>(cn - dn.rank - dn1.rank);
  for (int i = 0; i < free_n; ++i) factors.push_back(modulus);
  for (int64_t d : dn1.divisors) factors.push_back(std::gcd(d, modulus));
  if (n >= 2) {
    for (int64_t d : dn.divisors) factors.push_back(std::gcd(d, modulus));
  }
  std::erase(factors, 1);

  // Canonical invariant-factor form of the direct sum.
  IntMatrix diag(static_cast<int>(factors.size()), static_cast<int>(factors.size()));
  for (size_t i = 0; i < factors.size(); ++i) diag(static_cast<int>(i), static_cast<int>(i)) = factors[i];
  const auto inv = elementary_divisors(diag);
  for (int64_t d : inv.divisors) {
    if (d == modulus) ++h.free_rank;
    else h.torsion.push_back(d);
  }

  // Order cross-check with kernel and image computed directly mod m.
  const auto im_n = column_span_orders(theory.boundary_matrix(n), modulus);
  const auto im_n1 = column_span_orders(theory.boundary_matrix(n + 1), modulus);
  for (auto [p, e] : factorize(modulus)) {
    const int64_t direct = cn * e - valuation_of_product(im_n, p) - valuation_of_product(im_n1, p);
    if (direct != valuation_of_product(inv.divisors, p))
      throw InternalError("homology mod " + std::to_string(modulus) +
                          ": universal-coefficient order disagrees with the Howell computation");
  }
  return h;
}

std::string to_string(const HomologyGroup& h) {
  std::string base = h.modulus == 0 ? "Z" : "Z_" + std::to_string(h.modulus);
  std::vector<std::string> parts;
  if (h.free_rank == 1) parts.push_back(base);
  else if (h.free_rank > 1) parts.push_back(base + "^" + std::to_string(h.free_rank));
  for (int64_t d : h.torsion) parts.push_back("Z_" + std::to_string(d));
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

HomologyCoordinates::HomologyCoordinates(const ChainTheory& theory, int n) : theory_(&theory), n_(n) {
  if (n < 1 || n + 1 > theory.cap()) throw ContractError("class coordinates need degree n+1 <= cap");
  const SmithForm s = smith_normal_form(theory.boundary_matrix(n).to_dense());
  rank_n_ = s.rank;
  v_inv_ = s.V_inv;
  const IntMatrix image = v_inv_ * theory.boundary_matrix(n + 1).to_dense();
  const int cn = image.rows();
  IntMatrix block(cn - rank_n_, image.cols());
  for (int i = rank_n_; i < cn; ++i)
    for (int j = 0; j < image.cols(); ++j) {
      // rows above the rank are zero because boundary o boundary = 0
      block(i - rank_n_, j) = image(i, j);
    }
  for (int i = 0; i < rank_n_; ++i)
    for (int j = 0; j < image.cols(); ++j)
      if (image(i, j) != 0) throw InternalError("boundary composition is not zero");
  const SmithForm s2 = smith_normal_form(block);
  u_prime_ = s2.U;
  diag_.assign(block.rows(), 0);
  for (int i = 0; i < s2.rank; ++i) diag_[i] = s2.diagonal[i];
  for (int64_t d : diag_) {
    if (d == 0) ++free_rank_;
    else if (d > 1) torsion_.push_back(d);
  }
}

std::vector<int64_t> HomologyCoordinates::coordinates(const FormalChain& c) const {
  if (c.degree != n_) throw ContractError("class coordinates: wrong chain degree");
  if (c.modulus != 0) throw ContractError("class coordinates are integral");
  if (!theory_->boundary(c).is_zero()) throw ContractError("class coordinates: chain is not a cycle");
  const int cn = v_inv_.rows();
  std::vector<int64_t> v(cn, 0);
  for (auto [i, coeff] : c.terms) v[i] = coeff;
  std::vector<int64_t> k(cn - rank_n_, 0);
  for (int i = rank_n_; i < cn; ++i) {
    int64_t s = 0;
    for (int j = 0; j < cn; ++j)
      if (v[j] != 0) s = checked::axpy(s, v_inv_(i, j), v[j]);
    k[i - rank_n_] = s;
  }
  std::vector<int64_t> torsion_part, free_part;
  for (int i = 0; i < u_prime_.rows(); ++i) {
    int64_t y = 0;
    for (int j = 0; j < u_prime_.cols(); ++j)
      if (k[j] != 0) y = checked::axpy(y, u_prime_(i, j), k[j]);
    if (diag_[i] == 0) free_part.push_back(y);
    else if (diag_[i] > 1) torsion_part.push_back(checked::mod(y, diag_[i]));
  }
  torsion_part.insert(torsion_part.end(), free_part.begin(), free_part.end());
  return torsion_part;
}

// ---------------------------------------------------------------- cochains

CochainTable CochainTable::zero(Theory t, int degree, int64_t m, int base_size, int letter_size) {
  if (m < 2) throw InputError("cochain modulus must be at least 2");
  CochainTable c;
  c.theory = t;
  c.degree = degree;
  c.modulus = m;
  c.base_size = base_size;
  c.letter_size = letter_size;
  int64_t n = base_size;
  for (int i = 1; i < c.arity(); ++i) n = checked::mul(n, letter_size);
  c.values.assign(n, 0);
  return c;
}

int64_t CochainTable::flat_index(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != arity()) throw ContractError("cochain: wrong tuple length");
  if (tuple[0] < 0 || tuple[0] >= base_size) throw ContractError("cochain: entry out of range");
  int64_t idx = tuple[0];
  for (size_t i = 1; i < tuple.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= letter_size) throw ContractError("cochain: entry out of range");
    idx = idx * letter_size + tuple[i];
  }
  return idx;
}

std::vector<int> CochainTable::tuple_of(int64_t flat) const {
  std::vector<int> t(arity());
  for (int i = arity() - 1; i >= 1; --i) {
    t[i] = static_cast<int>(flat % letter_size);
    flat /= letter_size;
  }
  t[0] = static_cast<int>(flat);
  return t;
}

int64_t CochainTable::at(const Generator& g) const {
  if (g.degenerate()) return 0;
  std::vector<int> tuple{g.base};
  tuple.insert(tuple.end(), g.word.begin(), g.word.end());
  return (*this)(tuple);
}

namespace {

void check_matches(const ChainTheory& theory, const CochainTable& theta) {
  if (theta.theory != theory.theory())
    throw ContractError(std::string("cochain of theory ") + theory_name(theta.theory) +
                        " used with a " + theory_name(theory.theory()) + " complex");
  if (theta.base_size != theory.base_size() || theta.letter_size != theory.letter_size())
    throw ContractError("cochain and complex have different alphabets");
}

}  // namespace

int64_t CochainTable::evaluate(const ChainTheory& theory, const FormalChain& c) const {
  check_matches(theory, *this);
  if (c.degree != degree) throw ContractError("cochain evaluated on a chain of another degree");
  int64_t s = 0;
  for (auto [i, coeff] : c.terms) {
    const int64_t v = at(theory.generator(c.degree, i));
    s = (s + checked::mod(coeff, modulus) * v) % modulus;
  }
  return s;
}

bool is_cocycle(const ChainTheory& theory, const CochainTable& theta) {
  check_matches(theory, theta);
  const int n = theta.degree;
  const SparseMatrix& d = theory.boundary_matrix(n + 1);
  std::vector<int64_t> on_basis(theory.basis_size(n));
  for (int64_t i = 0; i < static_cast<int64_t>(on_basis.size()); ++i)
    on_basis[i] = theta.at(theory.generator(n, i));
  for (const auto& col : d.columns) {
    int64_t s = 0;
    for (auto [i, v] : col) s = (s + checked::mod(v, theta.modulus) * on_basis[i]) % theta.modulus;
    if (s != 0) return false;
  }
  return true;
}

CochainTable coboundary(const ChainTheory& theory, const CochainTable& psi) {
  check_matches(theory, psi);
  const int n = psi.degree;
  CochainTable out = CochainTable::zero(psi.theory, n + 1, psi.modulus, psi.base_size, psi.letter_size);
  const SparseMatrix& d = theory.boundary_matrix(n + 1);
  for (int64_t j = 0; j < d.cols; ++j) {
    int64_t s = 0;
    for (auto [i, v] : d.columns[j])
      s = (s + checked::mod(v, psi.modulus) * psi.at(theory.generator(n, i))) % psi.modulus;
    const Generator g = theory.generator(n + 1, j);
    std::vector<int> tuple{g.base};
    tuple.insert(tuple.end(), g.word.begin(), g.word.end());
    out.at(tuple) = s;
  }
  return out;
}

bool is_coboundary(const ChainTheory& theory, const CochainTable& theta) {
  check_matches(theory, theta);
  const int n = theta.degree;
  const int64_t cn = theory.basis_size(n);
  ModVector target(cn);
  for (int64_t i = 0; i < cn; ++i) target[i] = theta.at(theory.generator(n, i));
  if (n == 1) return std::all_of(target.begin(), target.end(), [](int64_t v) { return v == 0; });
  const SparseMatrix& d = theory.boundary_matrix(n);
  std::vector<ModVector> rows(d.rows, ModVector(cn, 0));
  for (int64_t j = 0; j < d.cols; ++j)
    for (auto [i, v] : d.columns[j]) rows[i][j] = checked::mod(v, theta.modulus);
  return HowellForm(std::move(rows), static_cast<int>(cn), theta.modulus).contains(target);
}

std::vector<CochainTable> cocycle_basis(const ChainTheory& theory, int n, int64_t m) {
  if (m < 2) throw InputError("cocycle modulus must be at least 2");
  const IntMatrix d = theory.boundary_matrix(n + 1).to_dense();
  std::vector<CochainTable> out;
  for (const auto& x : left_kernel_mod(d, m)) {
    CochainTable c = CochainTable::zero(theory.theory(), n, m, theory.base_size(), theory.letter_size());
    for (int64_t i = 0; i < static_cast<int64_t>(x.size()); ++i) {
      if (x[i] == 0) continue;
      const Generator g = theory.generator(n, i);
      std::vector<int> tuple{g.base};
      tuple.insert(tuple.end(), g.word.begin(), g.word.end());
      c.at(tuple) = x[i];
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace tknots
