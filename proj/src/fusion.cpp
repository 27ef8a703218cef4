#include "ftc/fusion.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ftc {

std::size_t FusionRing::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::invalid_argument("unknown label '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

long long FusionRing::n(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = mult.find({i, j, k});
  return it == mult.end() ? 0 : it->second;
}

void FusionRing::set(std::size_t i, std::size_t j, std::size_t k, long long value) {
  if (value == 0) mult.erase({i, j, k});
  else mult[{i, j, k}] = value;
}

BlockPartition BlockPartition::singletons(const FusionRing& f) {
  BlockPartition b;
  for (const auto& l : f.labels) b.classes.push_back({l});
  return b;
}

std::vector<std::size_t> BlockPartition::class_of(const FusionRing& f) const {
  const std::size_t none = classes.size();
  std::vector<std::size_t> out(f.size(), none);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw std::invalid_argument("empty block class");
    for (const auto& l : classes[c]) {
      std::size_t i = f.index_of(l);
      if (out[i] != none) throw std::invalid_argument("label '" + l + "' lies in two block classes");
      out[i] = c;
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] == none) throw std::invalid_argument("label '" + f.labels[i] + "' lies in no block class");
  return out;
}

BlockPartition BlockPartition::canonical(const FusionRing& f) const {
  auto cls = class_of(f);
  std::vector<std::vector<std::size_t>> idx(classes.size());
  for (std::size_t i = 0; i < cls.size(); ++i) idx[cls[i]].push_back(i);
  std::sort(idx.begin(), idx.end());
  BlockPartition out;
  for (const auto& c : idx) {
    std::vector<std::string> names;
    for (auto i : c) names.push_back(f.labels[i]);
    out.classes.push_back(std::move(names));
  }
  return out;
}

FusionReport validate_fusion(const FusionRing& f) {
  FusionReport r;
  const std::size_t n = f.size();
  const auto& L = f.labels;
  std::size_t one;
  try {
    one = f.unit_index();
  } catch (const std::invalid_argument&) {
    r.violations.push_back({"unit", {f.unit}, "unit label is not among the labels"});
    return r;
  }
  for (const auto& [key, v] : f.mult) {
    auto [i, j, k] = key;
    if (i >= n || j >= n || k >= n) throw std::out_of_range("multiplicity index out of range");
    if (v < 0) r.violations.push_back({"nonnegativity", {L[i], L[j], L[k]}, "N = " + std::to_string(v)});
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      long long want = j == k ? 1 : 0;
      if (f.n(one, j, k) != want)
        r.violations.push_back({"unit", {L[one], L[j], L[k]},
                                "left unit: N = " + std::to_string(f.n(one, j, k)) + ", expected " + std::to_string(want)});
      if (f.n(j, one, k) != want)
        r.violations.push_back({"unit", {L[j], L[one], L[k]},
                                "right unit: N = " + std::to_string(f.n(j, one, k)) + ", expected " + std::to_string(want)});
    }
  // Dense copy for the quartic scan.
  std::vector<long long> N(n * n * n, 0);
  for (const auto& [key, v] : f.mult) {
    auto [i, j, k] = key;
    N[(i * n + j) * n + k] = v;
  }
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return N[(i * n + j) * n + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          long long lhs = 0, rhs = 0;
          for (std::size_t t = 0; t < n; ++t) {
            lhs += at(i, j, t) * at(t, k, l);
            rhs += at(j, k, t) * at(i, t, l);
          }
          if (lhs != rhs)
            r.violations.push_back({"associativity", {L[i], L[j], L[k], L[l]},
                                    "(ij)k -> l gives " + std::to_string(lhs) + ", i(jk) -> l gives " + std::to_string(rhs)});
        }
  if (f.dual) {
    std::vector<std::size_t> star(n, n);
    for (auto [a, b] : *f.dual) {
      if (a >= n || b >= n) throw std::out_of_range("dual index out of range");
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        if (star[x] != n && star[x] != y)
          r.violations.push_back({"duality", {L[x], L[star[x]], L[y]}, "two different duals"});
        star[x] = y;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (star[i] == n) {
        r.violations.push_back({"duality", {L[i]}, "no dual given"});
        continue;
      }
      if (f.n(i, star[i], one) < 1)
        r.violations.push_back({"duality", {L[i], L[star[i]]}, "unit does not occur in i (x) i*"});
    }
  }
  return r;
}

IntMatrix lambda_relation_matrix(const FusionRing& f, const BlockPartition& b) {
  const std::size_t n = f.size();
  auto cls = b.class_of(f);
  IntMatrix m(0, n);
  std::set<std::vector<mpz_class>> seen;
  auto push = [&](std::vector<mpz_class> row) {
    if (seen.insert(row).second) m.append_row(row);
  };
  for (const auto& [key, v] : f.mult) {  // std::map iterates triples in sorted order
    if (v == 0) continue;
    auto [i, j, k] = key;
    std::vector<mpz_class> row(n, 0);
    row[i] += 1;
    row[j] += 1;
    row[k] -= 1;
    push(std::move(row));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c)
      if (cls[a] == cls[c]) {
        std::vector<mpz_class> row(n, 0);
        row[a] = 1;
        row[c] = -1;
        push(std::move(row));
      }
  return m;
}

LambdaGroup lambda_group(const FusionRing& f, const BlockPartition& b, long long char_p,
                         const std::optional<Field>& field) {
  AbelianGroupPresentation p{f.size(), lambda_relation_matrix(f, b)};
  LambdaGroup out;
  out.presented = abelian_invariants(p);
  out.characters = unit_character_group(out.presented, char_p);
  if (out.presented.infinite()) {
    std::ostringstream os;
    os << "lambda-group has free rank " << out.presented.free_rank
       << ": these fusion data cannot come from a finite tensor category over an algebraically closed field "
          "(the group of monoidal automorphisms of a tensor functor is finite)";
    throw InfiniteGroupError(os.str());
  }
  out.functions = enumerate_characters(p, char_p, field);
  const std::size_t one = f.unit_index();
  for (const auto& ch : out.functions) {
    if (ch.exponents[one] != 0) throw std::logic_error("lambda at the unit is not 1");
    if (!check_lambda(f, b, ch)) throw std::logic_error("enumerated lambda fails the membership test");
    if (ch.values && !check_lambda(f, b, *ch.values)) throw std::logic_error("evaluated lambda fails the membership test");
  }
  return out;
}

bool check_lambda(const FusionRing& f, const BlockPartition& b, const std::vector<Scalar>& values) {
  if (values.size() != f.size()) throw std::invalid_argument("lambda must assign a value to every label");
  for (const auto& [key, v] : f.mult) {
    auto [i, j, k] = key;
    if (v != 0 && values[i] * values[j] != values[k]) return false;
  }
  auto cls = b.class_of(f);
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t c = a + 1; c < f.size(); ++c)
      if (cls[a] == cls[c] && values[a] != values[c]) return false;
  return true;
}

bool check_lambda(const FusionRing& f, const BlockPartition& b, const UnitCharacter& lambda) {
  if (lambda.exponents.size() != f.size()) throw std::invalid_argument("lambda must assign a value to every label");
  const mpz_class& m = lambda.modulus;
  auto same = [&](const mpz_class& x, const mpz_class& y) {
    mpz_class d = x - y;
    return d % m == 0;
  };
  const auto& e = lambda.exponents;
  for (const auto& [key, v] : f.mult) {
    auto [i, j, k] = key;
    if (v != 0 && !same(e[i] + e[j], e[k])) return false;
  }
  auto cls = b.class_of(f);
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t c = a + 1; c < f.size(); ++c)
      if (cls[a] == cls[c] && !same(e[a], e[c])) return false;
  return true;
}

}  // namespace ftc
