#include "qcat/pbw.hpp"

#include "qcat/error.hpp"
#include "qcat/sparse_rank.hpp"

#include <algorithm>
#include <numeric>

namespace qcat {

std::uint64_t classical_dimension(std::size_t even, std::size_t odd, std::size_t degree) {
  mpz_class total = 0;
  for (std::size_t j = 0; j <= std::min(odd, degree); ++j) {
    mpz_class odd_part, even_part;
    mpz_bin_uiui(odd_part.get_mpz_t(), odd, j);
    const std::size_t rest = degree - j;
    if (even == 0) {
      even_part = rest == 0 ? 1 : 0;
    } else {
      mpz_bin_uiui(even_part.get_mpz_t(), even + rest - 1, rest);
    }
    total += odd_part * even_part;
  }
  return total.get_ui();
}

std::uint64_t classical_dimension(const Alphabet& alphabet, std::size_t degree) {
  std::size_t odd = 0;
  for (const auto& g : alphabet.letters) odd += g.parity;
  return classical_dimension(alphabet.size() - odd, odd, degree);
}

namespace {

std::uint64_t word_count(std::uint64_t n, std::size_t degree, std::uint64_t word_limit) {
  std::uint64_t words = 1;
  for (std::size_t d = 0; d < degree; ++d) {
    words *= n;
    if (words > word_limit)
      throw Error(ErrorKind::TooLarge, std::to_string(n) + "^" + std::to_string(degree) +
                                           " words exceed the oracle limit of " + std::to_string(word_limit));
  }
  return words;
}

}  // namespace

std::uint64_t dimension_oracle(const RelationSet& relations, std::size_t degree, std::uint64_t word_limit) {
  const std::uint64_t n = relations.alphabet.size();
  const std::uint64_t words = word_count(n, degree, word_limit);
  if (degree < 2) return words;

  Matrix basis = row_basis(relations.matrix);
  std::vector<SparseRow> rels;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < basis.cols(); ++c)
      if (basis(r, c) != 0) row.emplace_back(static_cast<std::uint32_t>(c), basis(r, c));
    rels.push_back(std::move(row));
  }

  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i + 2 <= degree; ++i) {
    std::uint64_t prefixes = 1, suffixes = 1;
    for (std::size_t k = 0; k < i; ++k) prefixes *= n;
    for (std::size_t k = 0; k < degree - 2 - i; ++k) suffixes *= n;
    const std::uint64_t shift = suffixes;
    for (std::uint64_t pre = 0; pre < prefixes; ++pre)
      for (std::uint64_t suf = 0; suf < suffixes; ++suf)
        for (const auto& rel : rels) {
          SparseRow row;
          row.reserve(rel.size());
          for (const auto& [col, v] : rel)
            row.emplace_back(static_cast<std::uint32_t>((pre * n * n + col) * shift + suf), v);
          // pre*n*n + col keeps columns sorted because col < n*n.
          rows.push_back(std::move(row));
        }
  }
  return words - sparse_rank(std::move(rows), words);
}

std::optional<std::vector<std::size_t>> order_tournament(const Orientation& eps) {
  const std::size_t n = eps.size();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (eps[a][b] > 0) ++indegree[b];
  std::vector<std::size_t> order;
  std::vector<bool> used(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t a = 0; a < n; ++a)
      if (!used[a] && indegree[a] == 0) {
        pick = a;
        break;
      }
    if (pick == n) return std::nullopt;
    used[pick] = true;
    order.push_back(pick);
    for (std::size_t b = 0; b < n; ++b)
      if (eps[pick][b] > 0) --indegree[b];
  }
  return order;
}

std::optional<std::vector<std::size_t>> order_by_enumeration(const Orientation& eps) {
  const std::size_t n = eps.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = eps[perm[i]][perm[j]] > 0;
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::optional<QuantumConstant> pbw_extract_constant(const QuantumObject& object) {
  if (!object.sudbery()) throw Error(ErrorKind::BadParameters, "quantum constant needs Sudbery parameters");
  const std::size_t n = object.dim();
  QuantumConstant out;
  out.ordering.resize(n);
  std::iota(out.ordering.begin(), out.ordering.end(), std::size_t{0});
  if (n <= 1) {
    out.unconstrained = true;
    return out;
  }

  const Matrix& q = object.sudbery()->q;
  const Matrix& p = object.sudbery()->p;
  auto ratio = [&](std::size_t a, std::size_t b) { return Scalar(p(a, b) / q(a, b)); };

  const Scalar c = ratio(0, 1);
  const Scalar inv = 1 / c;
  Orientation eps(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const Scalar r = ratio(a, b);
      if (r == c) {
        eps[a][b] = 1;
      } else if (r == inv) {
        eps[a][b] = -1;
      } else {
        return std::nullopt;
      }
    }
  out.c = c;
  if (c == 1) return out;  // every order works

  auto order = order_tournament(eps);
  if (!order) return std::nullopt;
  out.ordering = std::move(*order);
  return out;
}

bool PBWVerdict::oracle_classical() const {
  return std::all_of(oracle_dims.begin(), oracle_dims.end(),
                     [](const OracleDim& d) { return d.computed == d.classical; });
}

PBWVerdict pbw_criterion(const QuantumObject& source, const QuantumObject& target, std::size_t oracle_degree) {
  PBWVerdict v;
  auto cs = pbw_extract_constant(source);
  auto ct = pbw_extract_constant(target);
  if (cs) {
    v.ordering_source = cs->ordering;
    if (!cs->unconstrained) v.constant_source = cs->c;
  }
  if (ct) {
    v.ordering_target = ct->ordering;
    if (!ct->unconstrained) v.constant_target = ct->c;
  }

  if (source.dim() <= 1 || target.dim() <= 1) {
    v.criterion_holds = true;
    v.reason = "one-dimensional side: skew polynomial algebra";
    if (!v.constant_source && v.constant_target) v.constant_source = v.constant_target;
    if (!v.constant_target && v.constant_source) v.constant_target = v.constant_source;
  } else if (!cs) {
    v.reason = "source ratios admit no quantum constant with a transitive orientation";
  } else if (!ct) {
    v.reason = "target ratios admit no quantum constant with a transitive orientation";
  } else if (cs->c == ct->c || cs->c * ct->c == 1) {
    v.criterion_holds = true;
    v.reason = "c_source = c_target^{+-1}";
  } else {
    v.reason = "c_source != c_target^{+-1}";
  }

  if (oracle_degree >= 2) {
    HomAlgebra h = make_hom_algebra(source, target);
    word_count(h.alphabet.size(), oracle_degree, kOracleWordLimit);
    for (std::size_t d = 2; d <= oracle_degree; ++d)
      v.oracle_dims.push_back({d, dimension_oracle(h, d), classical_dimension(h.alphabet, d)});
  }
  return v;
}

}  // namespace qcat
