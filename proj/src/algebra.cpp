#include "duplicial/algebra.hpp"

#include <json.hpp>

namespace duplicial {

GroupTable validate_group(std::string name, std::vector<std::vector<int>> table, std::vector<std::string> labels) {
  const int n = int(table.size());
  if (n == 0) throw ValidationError("group '" + name + "': empty Cayley table");
  for (int a = 0; a < n; ++a) {
    if (int(table[a].size()) != n)
      throw ValidationError("group '" + name + "': row " + std::to_string(a) + " has length " +
                            std::to_string(table[a].size()));
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw ValidationError("group '" + name + "': product (" + std::to_string(a) + "," + std::to_string(b) +
                              ") out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ValidationError("group '" + name + "': not associative at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n; ++b) ok = ok && table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (e < 0) throw ValidationError("group '" + name + "': no identity element");
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) inv[a] = b;
    if (inv[a] < 0) throw ValidationError("group '" + name + "': element " + std::to_string(a) + " has no inverse");
  }
  if (labels.empty()) {
    for (int a = 0; a < n; ++a) labels.push_back(a == e ? "1" : "g" + std::to_string(a));
  }
  return {std::move(name), std::move(labels), std::move(table), e, std::move(inv)};
}

GroupTable parse_group(const std::string& spec) {
  if (spec == "trivial") return validate_group("trivial", {{0}});
  if (spec.size() > 1 && spec[0] == 'Z') {
    int n = 0;
    try {
      n = std::stoi(spec.substr(1));
    } catch (const std::exception&) {
      throw UsageError("bad cyclic group '" + spec + "'");
    }
    if (n < 1) throw UsageError("bad cyclic group '" + spec + "'");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) {
      labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g" + std::to_string(a));
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return validate_group(spec, std::move(t), std::move(labels));
  }
  if (spec == "V4") {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return validate_group("V4", std::move(t), {"1", "a", "b", "ab"});
  }
  if (spec == "S3") {
    // permutations of {0,1,2} in lexicographic order; (pq)(i) = p(q(i))
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        t[a][b] = int(std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    std::vector<std::string> labels;
    for (auto& q : perms) labels.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
    labels[0] = "1";
    return validate_group("S3", std::move(t), std::move(labels));
  }
  if (!spec.empty() && spec[0] == '[') {
    std::vector<std::vector<int>> t;
    try {
      t = nlohmann::json::parse(spec).get<std::vector<std::vector<int>>>();
    } catch (const std::exception& e) {
      throw UsageError("bad Cayley table '" + spec + "': " + e.what());
    }
    return validate_group("table", std::move(t));
  }
  throw UsageError("unknown group '" + spec + "'");
}

}  // namespace duplicial
