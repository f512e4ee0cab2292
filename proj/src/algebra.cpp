#include "tknots/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tknots/checked.hpp"

namespace tknots {

Table Table::from_rows(const IntTable& rows, int expected_rows, int expected_cols, int range,
                       const std::string& what) {
  if (rows.empty()) throw InputError(what + ": empty table");
  if (expected_rows >= 0 && static_cast<int>(rows.size()) != expected_rows)
    throw InputError(what + ": expected " + std::to_string(expected_rows) + " rows, got " +
                         std::to_string(rows.size()),
                     ErrorCode::kSizeMismatch);
  const int cols = expected_cols >= 0 ? expected_cols : static_cast<int>(rows.front().size());
  Table t(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) {
      throw InputError(what + ": row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(cols),
                       expected_cols >= 0 ? ErrorCode::kSizeMismatch : ErrorCode::kMalformedInput);
    }
    for (int c = 0; c < cols; ++c) {
      const int v = rows[r][c];
      if (v < 0 || v >= range)
        throw InputError(what + ": entry [" + std::to_string(r) + "][" + std::to_string(c) +
                         "] = " + std::to_string(v) + " out of range 0.." +
                         std::to_string(range - 1));
      t(static_cast<int>(r), c) = v;
    }
  }
  return t;
}

IntTable Table::to_rows() const {
  IntTable out(rows_, std::vector<int>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

bool AxiomReport::has(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

void AxiomReport::append(const AxiomReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

namespace {

// For every column c, checks that r -> t(r, c) is a permutation; returns the
// inverse table (inv(value, c) = r) and records each failing column.
Table column_inverse(const Table& t, const std::string& axiom, AxiomReport& report) {
  Table inv(t.rows(), t.cols(), -1);
  for (int c = 0; c < t.cols(); ++c) {
    bool ok = true;
    for (int r = 0; r < t.rows(); ++r) {
      int& slot = inv(t(r, c), c);
      if (slot != -1) ok = false;
      slot = r;
    }
    if (!ok) report.add(axiom, {c});
  }
  return inv;
}

Table square_table(const IntTable& rows, const std::string& what) {
  if (rows.empty()) throw InputError(what + ": empty table");
  const int m = static_cast<int>(rows.size());
  return Table::from_rows(rows, m, m, m, what);
}

}  // namespace

AxiomReport check_biquandle(const IntTable& under_rows, const IntTable& over_rows) {
  const Table under = square_table(under_rows, "under");
  const Table over = square_table(over_rows, "over");
  if (under.rows() != over.rows())
    throw InputError("under and over tables differ in size", ErrorCode::kSizeMismatch);
  const int m = under.rows();

  AxiomReport report;
  for (int a = 0; a < m; ++a)
    if (under(a, a) != over(a, a)) report.add("diagonal", {a});

  column_inverse(under, "under-bijective", report);
  column_inverse(over, "over-bijective", report);

  std::vector<int> hit(static_cast<size_t>(m) * m, -1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const int image = over(b, a) * m + under(a, b);
      if (hit[image] != -1) report.add("S-bijective", {a, b});
      hit[image] = a * m + b;
    }
  }

  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        if (under(under(a, b), under(c, b)) != under(under(a, c), over(b, c)))
          report.add("exchange-under-under", {a, b, c});
        if (over(under(a, b), under(c, b)) != under(over(a, c), over(b, c)))
          report.add("exchange-under-over", {a, b, c});
        if (over(over(a, b), over(c, b)) != over(over(a, c), under(b, c)))
          report.add("exchange-over-over", {a, b, c});
      }
    }
  }
  return report;
}

FiniteBiquandle FiniteBiquandle::from_tables(const IntTable& under, const IntTable& over) {
  AxiomReport report = check_biquandle(under, over);
  if (!report.passed()) throw AxiomError("tables do not define a biquandle", std::move(report));

  FiniteBiquandle bq;
  bq.under_ = square_table(under, "under");
  bq.over_ = square_table(over, "over");
  bq.size_ = bq.under_.rows();
  AxiomReport scratch;
  bq.under_inv_ = column_inverse(bq.under_, "under-bijective", scratch);
  bq.over_inv_ = column_inverse(bq.over_, "over-bijective", scratch);

  const int m = bq.size_;
  bq.s_inverse_.assign(static_cast<size_t>(m) * m, -1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      auto [c, d] = bq.S(a, b);
      bq.s_inverse_[c * m + d] = a * m + b;
    }
  return bq;
}

std::pair<Element, Element> FiniteBiquandle::solve_S(Element c, Element d) const {
  const int ab = s_inverse_[c * size_ + d];
  return {ab / size_, ab % size_};
}

bool FiniteBiquandle::is_quandle() const {
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      if (over(a, b) != a) return false;
  return true;
}

AxiomReport check_bset(const FiniteBiquandle& bq, const IntTable& action_rows) {
  if (action_rows.empty()) throw InputError("action: empty table");
  for (const auto& row : action_rows)
    if (static_cast<int>(row.size()) != bq.size())
      throw InputError("action has " + std::to_string(row.size()) +
                           " columns but the biquandle has " + std::to_string(bq.size()) +
                           " elements",
                       ErrorCode::kSizeMismatch);
  const int k = static_cast<int>(action_rows.size());
  const Table action = Table::from_rows(action_rows, k, bq.size(), k, "action");

  AxiomReport report;
  column_inverse(action, "action-bijective", report);
  const int m = bq.size();
  for (int x = 0; x < k; ++x)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (action(action(x, a), bq.over(b, a)) != action(action(x, b), bq.under(a, b)))
          report.add("compatibility", {x, a, b});
  return report;
}

FiniteBSet FiniteBSet::from_action(const FiniteBiquandle& bq, const IntTable& action) {
  AxiomReport report = check_bset(bq, action);
  if (!report.passed()) throw AxiomError("action does not define a B-set", std::move(report));
  FiniteBSet x;
  const int k = static_cast<int>(action.size());
  x.action_ = Table::from_rows(action, k, bq.size(), k, "action");
  AxiomReport scratch;
  x.action_inv_ = column_inverse(x.action_, "action-bijective", scratch);
  return x;
}

Element FiniteBSet::searrow(Element x, Element y) const {
  if (!strongly_connected_) throw ContractError("searrow requires a strongly connected B-set");
  return searrow_(x, y);
}

ShadowBiquandle ShadowBiquandle::create(FiniteBiquandle bq, const IntTable& action) {
  ShadowBiquandle sb;
  sb.bset_ = FiniteBSet::from_action(bq, action);
  sb.bq_ = std::move(bq);
  std::vector<std::string> labels;
  for (int i = 0; i < std::max(sb.bq_.size(), sb.bset_.size()); ++i)
    labels.push_back(std::to_string(i));
  sb.labels_ = std::move(labels);
  return sb;
}

void ShadowBiquandle::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) < std::max(bq_.size(), bset_.size()))
    throw ContractError("label map shorter than the structure");
  labels_ = std::move(labels);
}

ShadowBiquandle build_strong_connectivity(ShadowBiquandle sb) {
  FiniteBSet& xs = sb.bset_;
  const int k = xs.size();
  const int m = sb.bq_.size();
  xs.strongly_connected_ = false;
  xs.searrow_ = Table();
  if (k != m) return sb;
  Table searrow(k, k, -1);
  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < m; ++a) {
      int& slot = searrow(x, xs.act(x, a));
      if (slot != -1) return sb;
      slot = a;
    }
  }
  xs.searrow_ = std::move(searrow);
  xs.strongly_connected_ = true;
  return sb;
}

AxiomReport check_inverse_identities(const ShadowBiquandle& sb) {
  AxiomReport report;
  const int k = sb.bset_size();
  const int m = sb.biquandle_size();
  const FiniteBiquandle& bq = sb.biquandle();
  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (sb.act_inv(sb.act_inv(x, bq.under(a, b)), b) !=
            sb.act_inv(sb.act_inv(x, bq.over(b, a)), a))
          report.add("inverse-identity-1", {x, a, b});
        const int b_oi_a = bq.over_inv(b, a);
        if (sb.act(sb.act_inv(x, a), b_oi_a) != sb.act_inv(sb.act(x, b), bq.under(a, b_oi_a)))
          report.add("inverse-identity-2", {x, a, b});
        const int a_ui_b = bq.under_inv(a, b);
        if (sb.act(sb.act_inv(x, b), a_ui_b) != sb.act_inv(sb.act(x, a), bq.over(b, a_ui_b)))
          report.add("inverse-identity-3", {x, a, b});
      }
    }
  }
  return report;
}

AxiomReport check_searrow_identities(const ShadowBiquandle& sb) {
  if (!sb.strongly_connected())
    throw ContractError("searrow identities need a strongly connected B-set");
  AxiomReport report;
  const int k = sb.bset_size();
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      if (sb.act(x, sb.searrow(x, y)) != y) report.add("searrow-1", {x, y});
      if (sb.act_inv(y, sb.searrow(x, y)) != x) report.add("searrow-2", {x, y});
    }
    for (int a = 0; a < sb.biquandle_size(); ++a) {
      // x plays the role of y in (y *^{-1} a) \ y = a
      if (sb.searrow(sb.act_inv(x, a), x) != a) report.add("searrow-3", {x, a});
      if (sb.searrow(x, sb.act(x, a)) != a) report.add("searrow-4", {x, a});
    }
  }
  return report;
}

// ---------------------------------------------------------------- Alexander ring

AlexanderRing::AlexanderRing(int n, std::vector<int64_t> p) : n_(n) {
  if (n < 1) throw InputError("Alexander ring: modulus n must be positive");
  while (p.size() > 1 && checked::mod(p.back(), n) == 0) p.pop_back();
  if (p.size() < 2) throw InputError("Alexander ring: modulus polynomial must have degree >= 1");
  for (auto& c : p) c = checked::mod(c, n);
  if (n > 1 && p.back() != 1)
    throw InputError("Alexander ring: modulus polynomial must be monic");
  if (n > 1 && std::gcd(p.front(), static_cast<int64_t>(n)) != 1)
    throw InputError("Alexander ring: constant term of the modulus must be a unit mod n");
  p_ = std::move(p);
  degree_ = static_cast<int>(p_.size()) - 1;
  int64_t size = 1;
  for (int i = 0; i < degree_; ++i) {
    size = checked::mul(size, n);
    if (size > 4096) throw InputError("Alexander ring: more than 4096 elements");
  }
  size_ = static_cast<int>(size);
  t_ = degree_ == 1 ? from_int(-p_[0]) : from_coefficients({0, 1});
}

std::vector<int> AlexanderRing::coefficients(Element e) const {
  std::vector<int> c(degree_);
  for (int i = 0; i < degree_; ++i) {
    c[i] = e % n_;
    e /= n_;
  }
  return c;
}

Element AlexanderRing::from_coefficients(const std::vector<int64_t>& c) const {
  // Reduce modulo p: repeatedly cancel the top coefficient using the monic modulus.
  std::vector<int64_t> r(c.begin(), c.end());
  for (auto& v : r) v = checked::mod(v, n_);
  for (int top = static_cast<int>(r.size()) - 1; top >= degree_; --top) {
    const int64_t lead = r[top];
    if (lead == 0) continue;
    for (int i = 0; i <= degree_; ++i) {
      int64_t& slot = r[top - degree_ + i];
      slot = checked::mod(slot - lead * p_[i], n_);
    }
  }
  Element e = 0;
  for (int i = std::min<int>(degree_, static_cast<int>(r.size())) - 1; i >= 0; --i)
    e = e * n_ + static_cast<int>(r[i]);
  return e;
}

Element AlexanderRing::from_int(int64_t k) const { return from_coefficients({k}); }

Element AlexanderRing::add(Element a, Element b) const {
  auto ca = coefficients(a), cb = coefficients(b);
  std::vector<int64_t> s(degree_);
  for (int i = 0; i < degree_; ++i) s[i] = ca[i] + cb[i];
  return from_coefficients(s);
}

Element AlexanderRing::sub(Element a, Element b) const {
  auto ca = coefficients(a), cb = coefficients(b);
  std::vector<int64_t> s(degree_);
  for (int i = 0; i < degree_; ++i) s[i] = ca[i] - cb[i];
  return from_coefficients(s);
}

Element AlexanderRing::mul(Element a, Element b) const {
  auto ca = coefficients(a), cb = coefficients(b);
  std::vector<int64_t> prod(2 * degree_ - 1, 0);
  for (int i = 0; i < degree_; ++i)
    for (int j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % n_;
  return from_coefficients(prod);
}

std::optional<Element> AlexanderRing::inverse(Element a) const {
  const Element one = from_int(1);
  for (Element b = 0; b < size_; ++b)
    if (mul(a, b) == one) return b;
  return std::nullopt;
}

std::string AlexanderRing::label(Element e) const {
  const auto c = coefficients(e);
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < degree_; ++i) {
    if (c[i] == 0) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0 || c[i] != 1) out << c[i];
    if (i >= 1) out << "t";
    if (i >= 2) out << "^" << i;
  }
  return first ? "0" : out.str();
}

// ---------------------------------------------------------------- families

namespace {

ShadowBiquandle shadow_quandle(const IntTable& under, const std::string& name,
                               bool connect = true) {
  const int m = static_cast<int>(under.size());
  IntTable over(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) over[a][b] = a;
  ShadowBiquandle sb = ShadowBiquandle::create(FiniteBiquandle::from_tables(under, over), under);
  sb.set_name(name);
  return connect ? build_strong_connectivity(std::move(sb)) : sb;
}

}  // namespace

ShadowBiquandle dihedral(int n) {
  if (n < 1) throw InputError("dihedral: n must be positive");
  IntTable under(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) under[a][b] = static_cast<int>(checked::mod(2 * b - a, n));
  // The singleton is left unconnected on purpose: dihedral strong
  // connectivity is reserved for odd n > 1.
  return shadow_quandle(under, "dihedral(" + std::to_string(n) + ")", n != 1);
}

ShadowBiquandle alexander(int n, const std::vector<int64_t>& p) {
  const AlexanderRing ring(n, p);
  const int m = ring.size();
  const Element t = ring.t();
  const Element one_minus_t = ring.sub(ring.from_int(1), t);
  IntTable under(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) under[a][b] = ring.add(ring.mul(t, a), ring.mul(one_minus_t, b));

  std::ostringstream name;
  name << "alexander(" << n << ", [";
  for (size_t i = 0; i < p.size(); ++i) name << (i ? "," : "") << p[i];
  name << "])";
  ShadowBiquandle sb = shadow_quandle(under, name.str());
  std::vector<std::string> labels;
  for (Element e = 0; e < m; ++e) labels.push_back(ring.label(e));
  sb.set_labels(std::move(labels));

  const bool unit = ring.inverse(one_minus_t).has_value();
  if (unit != sb.strongly_connected())
    throw InternalError("Alexander quandle: unit test of 1-t disagrees with strong connectivity");
  return sb;
}

}  // namespace tknots
