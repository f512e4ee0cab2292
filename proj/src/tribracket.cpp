#include "tknots/tribracket.hpp"

namespace tknots {

namespace {

int cube_size(const CubeTable& table) {
  const int k = static_cast<int>(table.size());
  if (k == 0) throw InputError("tribracket: empty table");
  for (int x = 0; x < k; ++x) {
    if (static_cast<int>(table[x].size()) != k)
      throw InputError("tribracket: table is not cubical");
    for (int y = 0; y < k; ++y) {
      if (static_cast<int>(table[x][y].size()) != k)
        throw InputError("tribracket: table is not cubical");
      for (int z = 0; z < k; ++z) {
        const int v = table[x][y][z];
        if (v < 0 || v >= k)
          throw InputError("tribracket: entry [" + std::to_string(x) + "][" + std::to_string(y) +
                           "][" + std::to_string(z) + "] out of range");
      }
    }
  }
  return k;
}

}  // namespace

AxiomReport check_tribracket(const CubeTable& t) {
  const int k = cube_size(t);
  AxiomReport report;
  std::vector<char> seen(k);
  auto latin = [&](const char* name, auto value) {
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        bool ok = true;
        for (int s = 0; s < k; ++s) {
          int v = value(a, b, s);
          if (seen[v]) ok = false;
          seen[v] = 1;
        }
        if (!ok) report.add(name, {a, b});
      }
  };
  // H1-(i): z free; H1-(ii): y free; H1-(iii): x free
  latin("H1-i", [&](int x, int y, int z) { return t[x][y][z]; });
  latin("H1-ii", [&](int x, int z, int y) { return t[x][y][z]; });
  latin("H1-iii", [&](int y, int z, int x) { return t[x][y][z]; });
  if (!report.passed()) return report;  // H2 presumes latin lookups

  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z)
        for (int w = 0; w < k; ++w) {
          const int xyz = t[x][y][z], xyw = t[x][y][w], xzw = t[x][z][w];
          const int a = t[y][xyz][xyw], b = t[z][xyz][xzw], c = t[w][xyw][xzw];
          if (a != b || b != c) report.add("H2", {x, y, z, w});
        }
  return report;
}

HorizontalTribracket HorizontalTribracket::from_table(const CubeTable& table) {
  AxiomReport report = check_tribracket(table);
  if (!report.passed())
    throw AxiomError("table does not define a horizontal tribracket", std::move(report));
  HorizontalTribracket h;
  const int k = static_cast<int>(table.size());
  h.k_ = k;
  const size_t n = static_cast<size_t>(k) * k * k;
  h.t_.resize(n);
  h.s1_.resize(n);
  h.s2_.resize(n);
  h.s3_.resize(n);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z) {
        const int w = table[x][y][z];
        h.t_[h.idx(x, y, z)] = w;
        h.s1_[h.idx(w, y, z)] = x;
        h.s2_[h.idx(x, w, z)] = y;
        h.s3_[h.idx(x, y, w)] = z;
      }
  for (int i = 0; i < k; ++i) h.labels_.push_back(std::to_string(i));
  return h;
}

CubeTable HorizontalTribracket::to_cube() const {
  CubeTable c(k_, std::vector<std::vector<int>>(k_, std::vector<int>(k_)));
  for (int x = 0; x < k_; ++x)
    for (int y = 0; y < k_; ++y)
      for (int z = 0; z < k_; ++z) c[x][y][z] = (*this)(x, y, z);
  return c;
}

LocalPair local_under(const HorizontalTribracket& t, LocalPair p, LocalPair q) {
  if (p.base != q.base) throw ContractError("local_under: pairs lie in different fibers");
  return {q.fiber, t(p.base, p.fiber, q.fiber)};
}

LocalPair local_over(const HorizontalTribracket& t, LocalPair p, LocalPair q) {
  if (p.base != q.base) throw ContractError("local_over: pairs lie in different fibers");
  return {q.fiber, t(p.base, q.fiber, p.fiber)};
}

HorizontalTribracket corresponding_tribracket(const ShadowBiquandle& sb) {
  if (!sb.strongly_connected())
    throw ContractError("corresponding tribracket needs a strongly connected shadow biquandle");
  const int k = sb.bset_size();
  CubeTable table(k, std::vector<std::vector<int>>(k, std::vector<int>(k)));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z) {
        const int a = sb.searrow(x, y), b = sb.searrow(x, z);
        const int first = sb.act(y, sb.over(b, a));
        const int second = sb.act(z, sb.under(a, b));
        if (first != second)
          throw InternalError("tribracket expressions disagree at (" + std::to_string(x) + "," +
                              std::to_string(y) + "," + std::to_string(z) + ")");
        table[x][y][z] = first;
      }
  HorizontalTribracket h = HorizontalTribracket::from_table(table);
  h.set_labels(sb.labels());
  return h;
}

HorizontalTribracket dihedral_tribracket(int n) {
  if (n < 1) throw InputError("dihedral tribracket: n must be positive");
  CubeTable table(n, std::vector<std::vector<int>>(n, std::vector<int>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) table[x][y][z] = ((x - y + z) % n + n) % n;
  return HorizontalTribracket::from_table(table);
}

HorizontalTribracket alexander_tribracket(int n, const std::vector<int64_t>& p) {
  const AlexanderRing ring(n, p);
  const int k = ring.size();
  const Element t = ring.t();
  CubeTable table(k, std::vector<std::vector<int>>(k, std::vector<int>(k)));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z)
        table[x][y][z] = ring.add(ring.mul(t, ring.sub(y, x)), z);
  HorizontalTribracket h = HorizontalTribracket::from_table(table);
  std::vector<std::string> labels;
  for (int e = 0; e < k; ++e) labels.push_back(ring.label(e));
  h.set_labels(std::move(labels));
  return h;
}

}  // namespace tknots
