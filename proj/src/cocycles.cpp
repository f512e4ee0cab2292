#include "tknots/cocycles.hpp"

#include "tknots/checked.hpp"

namespace tknots {

namespace {

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked::mul(r, b);
  return r;
}

bool is_odd_prime(int n) {
  if (n < 3 || n % 2 == 0) return false;
  for (int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_odd_prime(int n) {
  if (!is_odd_prime(n)) throw InputError("Mochizuki cocycles need an odd prime n, got " + std::to_string(n));
}

// lead * (p^n + q^n - 2 r^n) / n mod n with an exactness check on the division.
int64_t scaled_quotient(int n, int64_t lead, int64_t p, int64_t q, int64_t r) {
  const int64_t num = checked::sub(checked::add(ipow(p, n), ipow(q, n)), checked::mul(2, ipow(r, n)));
  if (num % n != 0) throw InternalError("Mochizuki numerator not divisible by n");
  return checked::mod(checked::mul(lead, num / n), n);
}

// Fills a table by visiting every tuple; degenerate SB/LB tuples stay 0.
template <class F>
CochainTable tabulate(Theory t, int degree, int n, F f) {
  CochainTable c = CochainTable::zero(t, degree, n, n, n);
  for (int64_t i = 0; i < static_cast<int64_t>(c.values.size()); ++i) {
    const auto tuple = c.tuple_of(i);
    if (t != Theory::N) {
      bool degenerate = false;
      for (size_t j = 1; j + 1 < tuple.size(); ++j) degenerate = degenerate || tuple[j] == tuple[j + 1];
      if (degenerate) continue;
    }
    c.values[i] = f(tuple);
  }
  return c;
}

}  // namespace

int64_t mochizuki_value(int n, int64_t x, int64_t y, int64_t z) {
  return scaled_quotient(n, x - y, 2 * z - y, y, z);
}

CochainTable mochizuki_2cocycle(int n) {
  require_odd_prime(n);
  return tabulate(Theory::SB, 2, n,
                  [n](const std::vector<int>& t) { return mochizuki_value(n, t[0], t[1], t[2]); });
}

CochainTable mochizuki_3cocycle(int n) {
  require_odd_prime(n);
  return tabulate(Theory::SB, 3, n,
                  [n](const std::vector<int>& t) { return mochizuki_value(n, t[1], t[2], t[3]); });
}

CochainTable transport_mu(const CochainTable& theta, const ShadowBiquandle& sb) {
  if (theta.theory != Theory::SB) throw ContractError("transport_mu expects an SB cochain");
  if (!sb.strongly_connected()) throw ContractError("transport_mu needs a strongly connected shadow biquandle");
  if (theta.base_size != sb.bset_size() || theta.letter_size != sb.biquandle_size())
    throw ContractError("transport_mu: cochain and shadow biquandle sizes differ");
  const int k = sb.bset_size();
  CochainTable out = CochainTable::zero(Theory::LB, theta.degree, theta.modulus, k, k);
  for (int64_t i = 0; i < static_cast<int64_t>(out.values.size()); ++i) {
    auto tuple = out.tuple_of(i);
    for (size_t j = 1; j < tuple.size(); ++j) tuple[j] = sb.searrow(tuple[0], tuple[j]);
    out.values[i] = theta(tuple);
  }
  return out;
}

CochainTable closed_form_LB(int n, int degree) {
  require_odd_prime(n);
  if (degree == 2)
    return tabulate(Theory::LB, 2, n, [n](const std::vector<int>& t) {
      const int64_t x = t[0], y = t[1], z = t[2];
      return scaled_quotient(n, x - y, x - y + 2 * z, x + y, x + z);
    });
  if (degree == 3)
    return tabulate(Theory::LB, 3, n, [n](const std::vector<int>& t) {
      const int64_t x = t[0], y = t[1], z = t[2], w = t[3];
      return scaled_quotient(n, y - z, x - z + 2 * w, x + z, x + w);
    });
  throw InputError("closed_form_LB: degree must be 2 or 3");
}

CochainTable closed_form_N(int n, int degree) {
  require_odd_prime(n);
  if (degree == 1)
    return tabulate(Theory::N, 1, n, [n](const std::vector<int>& t) {
      const int64_t x = t[0], y = t[1], z = t[2];
      return scaled_quotient(n, x - y, -x + y + 2 * z, x + y, y + z);
    });
  if (degree == 2)
    return tabulate(Theory::N, 2, n, [n](const std::vector<int>& t) {
      const int64_t y = t[1], z = t[2], w = t[3];
      return scaled_quotient(n, t[0] - z, -y + z + 2 * w, y + z, z + w);
    });
  throw InputError("closed_form_N: degree must be 1 or 2");
}

CochainTable compose_through_bracket(const CochainTable& lb, const HorizontalTribracket& t) {
  if (lb.theory != Theory::LB) throw ContractError("compose_through_bracket expects an LB cochain");
  if (lb.base_size != t.size()) throw ContractError("compose_through_bracket: size mismatch");
  const int k = t.size();
  CochainTable out = CochainTable::zero(Theory::N, lb.degree - 1, lb.modulus, k, k);
  for (int64_t i = 0; i < static_cast<int64_t>(out.values.size()); ++i) {
    const auto v = out.tuple_of(i);
    std::vector<int> pair_tuple;
    if (lb.degree == 2) {
      pair_tuple = {v[0], v[1], t.solve_third(v[0], v[1], v[2])};
    } else if (lb.degree == 3) {
      const int inner = t.solve_third(v[1], v[2], v[3]);
      pair_tuple = {v[0], v[1], t.solve_third(v[0], v[1], v[2]), t.solve_third(v[0], v[1], inner)};
    } else {
      throw ContractError("compose_through_bracket: LB degree must be 2 or 3");
    }
    Generator g{pair_tuple[0], {pair_tuple.begin() + 1, pair_tuple.end()}};
    out.values[i] = lb.at(g);
  }
  return out;
}

CochainTable scaled(const CochainTable& theta, int64_t k) {
  CochainTable out = theta;
  for (auto& v : out.values) v = checked::mod(checked::mul(v, k), theta.modulus);
  return out;
}

int parse_mochizuki_spec(const std::string& spec) {
  const std::string prefix = "mochizuki:";
  if (spec.rfind(prefix, 0) != 0) throw InputError("unknown cocycle specifier '" + spec + "'");
  try {
    size_t used = 0;
    const int n = std::stoi(spec.substr(prefix.size()), &used);
    if (used != spec.size() - prefix.size()) throw std::invalid_argument("trailing characters");
    return n;
  } catch (const std::logic_error&) {
    throw InputError("bad cocycle specifier '" + spec + "'");
  }
}

}  // namespace tknots
