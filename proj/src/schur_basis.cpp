// Copyright 2026 The schurprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schurprep/schur_basis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "schurprep/errors.hpp"

namespace schurprep {

const SchurBasisEntry* SchurBasisSet::find(const GTPattern& mu,
                                           const std::vector<int>& sigma) const {
  for (const auto& e : entries)
    if (e.mu == mu && e.sigma == sigma) return &e;
  return nullptr;
}

const SchurBasisSet* SchurDecomposition::sector(const Partition& lambda) const {
  for (const auto& s : sectors)
    if (s.lambda == lambda) return &s;
  return nullptr;
}

namespace {

// Shape trajectory of a standard tableau reconstructed from box contents.
struct TableauInfo {
  Partition shape;
  std::vector<int> path;  // row of box t+1, t = 1..N-1
};

TableauInfo tableau_from_contents(const std::vector<int>& contents, int N) {
  std::vector<int> len(static_cast<size_t>(N) + 1, 0);
  len[1] = 1;  // box 1 at (1,1)
  int rows = 1;
  TableauInfo info;
  for (int t = 2; t <= N; ++t) {
    const int c = contents[static_cast<size_t>(t - 2)];
    int placed_row = 0;
    for (int r = 1; r <= rows + 1; ++r) {
      if (len[static_cast<size_t>(r)] + 1 - r != c) continue;
      if (r > 1 && len[static_cast<size_t>(r)] + 1 > len[static_cast<size_t>(r - 1)]) continue;
      placed_row = r;
      break;
    }
    if (placed_row == 0)
      throw InternalError("Jucys-Murphy contents do not describe a standard tableau");
    len[static_cast<size_t>(placed_row)] += 1;
    rows = std::max(rows, placed_row);
    info.path.push_back(placed_row);
  }
  std::vector<int> parts(len.begin() + 1, len.begin() + 1 + rows);
  info.shape = Partition(std::move(parts));
  return info;
}

// Quadratic Casimir of gl(r) on the irrep with nonincreasing row nu:
// sum_i nu_i^2 + (r + 1 - 2i) nu_i.
long long casimir2_eigenvalue(const std::vector<int>& nu) {
  const int r = static_cast<int>(nu.size());
  long long v = 0;
  for (int i = 1; i <= r; ++i) {
    const long long x = nu[static_cast<size_t>(i - 1)];
    v += x * x + static_cast<long long>(r + 1 - 2 * i) * x;
  }
  return v;
}

// Exact eigenvalue of the Gelfand invariant tr(E^p) on the U(r) irrep nu,
// evaluated on the explicit highest-weight vector (antisymmetrized columns)
// in (C^r)^{tensor n}. The values of p = 1..r determine the shifted-weight
// power sums and hence the row, so escalating p resolves every quadratic
// Casimir collision (e.g. (4,1,1) vs (3,3,0), both sum 6 and C2 = 24).
long long model_power_sum_eigenvalue(std::vector<int> nu, int r, int p) {
  nu.resize(static_cast<size_t>(r), 0);
  const int n = std::accumulate(nu.begin(), nu.end(), 0);
  if (n == 0) return 0;

  using Word = std::vector<signed char>;
  using ModelVec = std::map<Word, long long>;

  // Column heights of the diagram.
  std::vector<int> heights;
  for (int c = 0; c < nu[0]; ++c) {
    int h = 0;
    for (int x : nu)
      if (x > c) ++h;
    heights.push_back(h);
  }

  ModelVec hwv{{Word{}, 1}};
  for (int h : heights) {
    std::vector<signed char> perm(static_cast<size_t>(h));
    for (int i = 0; i < h; ++i) perm[static_cast<size_t>(i)] = static_cast<signed char>(i);
    ModelVec grown;
    do {
      long long sign = 1;
      for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b)
          if (perm[a] > perm[b]) sign = -sign;
      for (const auto& [word, coeff] : hwv) {
        Word w = word;
        w.insert(w.end(), perm.begin(), perm.end());
        grown[std::move(w)] += sign * coeff;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    hwv = std::move(grown);
  }

  auto apply_e = [&](int i, int j, const ModelVec& in) {
    ModelVec out;
    for (const auto& [word, coeff] : in)
      for (size_t pos = 0; pos < word.size(); ++pos)
        if (word[pos] == j) {
          Word w = word;
          w[pos] = static_cast<signed char>(i);
          out[std::move(w)] += coeff;
        }
    return out;
  };

  ModelVec total;
  for (int i0 = 0; i0 < r; ++i0) {
    std::vector<ModelVec> chain(static_cast<size_t>(r));
    chain[static_cast<size_t>(i0)] = hwv;
    for (int step = 0; step < p; ++step) {
      std::vector<ModelVec> next(static_cast<size_t>(r));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          if (chain[static_cast<size_t>(j)].empty()) continue;
          for (auto& [word, coeff] : apply_e(i, j, chain[static_cast<size_t>(j)]))
            next[static_cast<size_t>(i)][word] += coeff;
        }
      chain = std::move(next);
    }
    for (const auto& [word, coeff] : chain[static_cast<size_t>(i0)]) total[word] += coeff;
  }

  const auto ref = hwv.begin();
  const long long num = total.count(ref->first) ? total.at(ref->first) : 0;
  if (num % ref->second != 0)
    throw InternalError("power-sum model eigenvalue is not integral");
  const long long value = num / ref->second;
  for (const auto& [word, coeff] : hwv)
    if ((total.count(word) ? total.at(word) : 0) != value * coeff)
      throw InternalError("highest-weight model vector is not an eigenvector");
  for (const auto& [word, coeff] : total)
    if (coeff != value * (hwv.count(word) ? hwv.at(word) : 0))
      throw InternalError("highest-weight model vector is not an eigenvector");
  if (p == 2 && value != casimir2_eigenvalue(nu))
    throw InternalError("power-sum model disagrees with the quadratic Casimir formula");
  return value;
}

struct WeightSubspace {
  std::vector<std::int64_t> global;                       // basis indices
  std::unordered_map<std::int64_t, int> local;            // inverse map

  int dim() const { return static_cast<int>(global.size()); }
};

// Matrix of the Jucys-Murphy element X_t = sum_{u<t} (u t) on the subspace.
Eigen::MatrixXd jm_matrix(const WeightSubspace& sub, int t, int d, int N) {
  const int n = sub.dim();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  std::vector<int> digits(static_cast<size_t>(N));
  for (int c = 0; c < n; ++c) {
    const std::int64_t x = sub.global[static_cast<size_t>(c)];
    for (int k = 1; k <= N; ++k) digits[static_cast<size_t>(k - 1)] = state_digit(x, k, d, N);
    for (int u = 1; u < t; ++u) {
      std::swap(digits[static_cast<size_t>(u - 1)], digits[static_cast<size_t>(t - 1)]);
      const std::int64_t y = state_index(digits, d);
      std::swap(digits[static_cast<size_t>(u - 1)], digits[static_cast<size_t>(t - 1)]);
      m(sub.local.at(y), c) += 1.0;
    }
  }
  return m;
}

// Matrix of the Gelfand invariant tr(E^p) over levels 1..r, restricted to a
// block frame (columns of `frame` in subspace coordinates). Intermediate
// chain vectors leave the weight subspace, so they are kept as sparse global
// vectors.
Eigen::MatrixXd power_sum_block_matrix(const WeightSubspace& sub, const Eigen::MatrixXd& frame,
                                       int r, int p, int d, int N) {
  using SparseVec = std::unordered_map<std::int64_t, double>;
  std::vector<std::int64_t> stride(static_cast<size_t>(N));
  {
    std::int64_t s = 1;
    for (int k = N; k >= 1; --k) {
      stride[static_cast<size_t>(k - 1)] = s;
      s *= d;
    }
  }
  auto apply_e = [&](int i, int j, const SparseVec& in) {
    SparseVec out;
    for (const auto& [x, c] : in)
      for (int k = 1; k <= N; ++k)
        if (state_digit(x, k, d, N) == j - 1)
          out[x + static_cast<std::int64_t>(i - j) * stride[static_cast<size_t>(k - 1)]] += c;
    return out;
  };

  const int cols = static_cast<int>(frame.cols());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(cols, cols);
  for (int b = 0; b < cols; ++b) {
    SparseVec v;
    for (int loc = 0; loc < sub.dim(); ++loc)
      if (frame(loc, b) != 0.0) v[sub.global[static_cast<size_t>(loc)]] = frame(loc, b);
    SparseVec result;
    for (int i0 = 1; i0 <= r; ++i0) {
      std::vector<SparseVec> chain(static_cast<size_t>(r));
      chain[static_cast<size_t>(i0 - 1)] = v;
      for (int step = 0; step < p; ++step) {
        std::vector<SparseVec> next(static_cast<size_t>(r));
        for (int i = 1; i <= r; ++i)
          for (int j = 1; j <= r; ++j) {
            if (chain[static_cast<size_t>(j - 1)].empty()) continue;
            for (const auto& [x, c] : apply_e(i, j, chain[static_cast<size_t>(j - 1)]))
              next[static_cast<size_t>(i - 1)][x] += c;
          }
        chain = std::move(next);
      }
      for (const auto& [x, c] : chain[static_cast<size_t>(i0 - 1)]) result[x] += c;
    }
    // tr(E^p) commutes with the weight grading and the Jucys-Murphy family,
    // so the image stays inside the block.
    Eigen::VectorXd w = Eigen::VectorXd::Zero(sub.dim());
    for (const auto& [x, c] : result) {
      auto it = sub.local.find(x);
      if (it == sub.local.end())
        throw InternalError("Gelfand invariant left the weight subspace");
      w[it->second] = c;
    }
    m.col(b) = frame.transpose() * w;
  }
  return m;
}

struct Block {
  Eigen::MatrixXd frame;     // subspace-local orthonormal columns
  std::vector<int> contents; // JM eigenvalues gathered so far
};

// Split a block by the eigenvalues of frame^T op frame. All operators used
// here have integer spectra, so eigenvalues cluster cleanly; the tolerance
// scales with the spectral radius to stay above solver noise.
std::vector<std::pair<double, Eigen::MatrixXd>> split_block(const Eigen::MatrixXd& frame,
                                                            const Eigen::MatrixXd& op,
                                                            double cluster_tol) {
  const Eigen::MatrixXd reduced = frame.transpose() * op * frame;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      0.5 * (reduced + reduced.transpose()));
  if (solver.info() != Eigen::Success) throw InternalError("eigensolver failed");
  const Eigen::VectorXd vals = solver.eigenvalues();
  const Eigen::MatrixXd vecs = solver.eigenvectors();
  const double scale = vals.size() ? vals.cwiseAbs().maxCoeff() : 0.0;
  const double tol = std::max(cluster_tol, 1e-12 * scale);
  std::vector<std::pair<double, Eigen::MatrixXd>> out;
  int start = 0;
  for (int i = 1; i <= vals.size(); ++i) {
    if (i == vals.size() || std::abs(vals[i] - vals[start]) > tol) {
      const int width = i - start;
      out.emplace_back(vals.segment(start, width).mean(),
                       frame * vecs.middleCols(start, width));
      start = i;
    }
  }
  return out;
}

}  // namespace

SchurDecomposition schur_basis_all(int d, int N, const SimOptions& opts) {
  const std::int64_t dim = dense_dimension(d, N, opts.cap);

  // Group computational basis indices by occupation vector.
  std::map<std::vector<int>, WeightSubspace> weights;
  for (std::int64_t x = 0; x < dim; ++x) {
    std::vector<int> counts(static_cast<size_t>(d), 0);
    for (int k = 1; k <= N; ++k) counts[static_cast<size_t>(state_digit(x, k, d, N))] += 1;
    WeightSubspace& sub = weights[counts];
    sub.local[x] = sub.dim();
    sub.global.push_back(x);
  }

  // GT patterns per sector, bucketed by weight.
  std::map<Partition, std::map<std::vector<int>, std::vector<GTPattern>>> patterns_by_weight;
  for (const Partition& lambda : enumerate_partitions(N, d))
    for (const GTPattern& mu : enumerate_gt_patterns(lambda, d))
      patterns_by_weight[lambda][gt_weight(mu).omega].push_back(mu);

  std::map<Partition, SchurBasisSet> sectors;

  for (auto& [omega, sub] : weights) {
    const int n = sub.dim();
    std::vector<Block> blocks{{Eigen::MatrixXd::Identity(n, n), {}}};
    for (int t = 2; t <= N; ++t) {
      const Eigen::MatrixXd xt = jm_matrix(sub, t, d, N);
      std::vector<Block> next;
      for (Block& b : blocks) {
        for (auto& [val, frame] : split_block(b.frame, xt, opts.cluster_tol)) {
          const int content = static_cast<int>(std::lround(val));
          if (std::abs(val - content) > 10 * opts.cluster_tol)
            throw InternalError("non-integer Jucys-Murphy eigenvalue");
          std::vector<int> contents = b.contents;
          contents.push_back(content);
          next.push_back({std::move(frame), std::move(contents)});
        }
      }
      blocks = std::move(next);
    }

    for (Block& b : blocks) {
      const TableauInfo tab = tableau_from_contents(b.contents, N);
      if (tab.shape.rows() > d)
        throw InternalError("tableau with more rows than levels survived weight grading");
      auto& candidates = patterns_by_weight.at(tab.shape).at(omega);
      if (static_cast<int>(candidates.size()) != b.frame.cols())
        throw InternalError("weight multiplicity mismatch in sector " + tab.shape.str());

      // Resolve the GT pattern inside a degenerate weight. Nested Gelfand
      // invariants tr(E^p) over levels 1..r grade the pattern rows; p
      // escalates past 2 only when quadratic Casimir values collide.
      struct Piece {
        Eigen::MatrixXd frame;
        std::vector<GTPattern> candidates;
      };
      std::vector<Piece> pieces{{b.frame, candidates}};
      std::map<std::pair<std::vector<int>, int>, long long> predicted_cache;
      auto predicted = [&](const std::vector<int>& row, int r, int p) {
        const auto key = std::make_pair(row, p);
        auto it = predicted_cache.find(key);
        if (it == predicted_cache.end())
          it = predicted_cache.emplace(key, model_power_sum_eigenvalue(row, r, p)).first;
        return it->second;
      };
      for (int r = 2; r <= d - 1; ++r) {
        for (int p = 2; p <= r; ++p) {
          std::vector<Piece> next;
          bool split_any = false;
          for (Piece& piece : pieces) {
            bool uniform = true;
            for (const GTPattern& mu : piece.candidates)
              if (predicted(mu.row(r), r, p) != predicted(piece.candidates.front().row(r), r, p))
                uniform = false;
            if (piece.frame.cols() == 1 || uniform) {
              next.push_back(std::move(piece));
              continue;
            }
            split_any = true;
            const Eigen::MatrixXd m = power_sum_block_matrix(sub, piece.frame, r, p, d, N);
            const Eigen::MatrixXd id =
                Eigen::MatrixXd::Identity(piece.frame.cols(), piece.frame.cols());
            for (auto& [val, coeffs] : split_block(id, m, opts.cluster_tol)) {
              Piece q;
              q.frame = piece.frame * coeffs;
              for (const GTPattern& mu : piece.candidates) {
                const double pred = static_cast<double>(predicted(mu.row(r), r, p));
                if (std::abs(pred - val) < std::max(0.5, 1e-9 * std::abs(pred)))
                  q.candidates.push_back(mu);
              }
              if (static_cast<int>(q.candidates.size()) != q.frame.cols())
                throw InternalError(
                    "Gelfand invariant spectrum does not separate GT candidates");
              next.push_back(std::move(q));
            }
          }
          pieces = std::move(next);
          (void)split_any;
        }
        for (const Piece& piece : pieces)
          for (const GTPattern& mu : piece.candidates)
            if (mu.row(r) != piece.candidates.front().row(r))
              throw InternalError("GT row unresolved after the full power-sum ladder");
      }

      SchurBasisSet& set = sectors[tab.shape];
      if (set.entries.empty()) {
        set.lambda = tab.shape;
        set.d = d;
        set.N = N;
      }
      for (const Piece& p : pieces) {
        if (p.frame.cols() != 1 || p.candidates.size() != 1)
          throw InternalError("unresolved GT degeneracy after all nested Casimirs");
        DenseState state;
        state.d = d;
        state.N = N;
        state.amplitudes = StateVector::Zero(dim);
        for (int loc = 0; loc < n; ++loc)
          state.amplitudes[sub.global[static_cast<size_t>(loc)]] = p.frame(loc, 0);
        fix_phase(state);
        set.entries.push_back({p.candidates.front(), tab.path, std::move(state)});
      }
    }
  }

  SchurDecomposition out;
  out.d = d;
  out.N = N;
  for (const Partition& lambda : enumerate_partitions(N, d)) {
    auto it = sectors.find(lambda);
    if (it == sectors.end())
      throw InternalError("sector " + lambda.str() + " missing from decomposition");
    const BigInt expected = weyl_dimension(lambda, d) * sym_group_dimension(lambda);
    if (BigInt(static_cast<long>(it->second.entries.size())) != expected)
      throw InternalError("sector " + lambda.str() + " has wrong cardinality");
    std::sort(it->second.entries.begin(), it->second.entries.end(),
              [](const SchurBasisEntry& a, const SchurBasisEntry& b) {
                return std::tie(a.sigma, a.mu) < std::tie(b.sigma, b.mu);
              });
    out.sectors.push_back(std::move(it->second));
  }
  return out;
}

SchurBasisSet gt_chain_basis(const Partition& lambda, int d, int N, const SimOptions& opts) {
  if (lambda.sum() != N)
    throw ValidationError("lambda " + lambda.str() + " is not a partition of " + std::to_string(N));
  if (lambda.rows() > d)
    throw ValidationError("empty sector: " + lambda.str() + " has more than " +
                          std::to_string(d) + " rows");
  SchurDecomposition all = schur_basis_all(d, N, opts);
  for (auto& s : all.sectors)
    if (s.lambda == lambda) return std::move(s);
  throw InternalError("sector not found");
}

DenseState prepare_first_quantized(const LabeledSuperposition& task, int d,
                                   const SimOptions& opts) {
  const SchurBasisSet basis = gt_chain_basis(task.lambda, d, task.N, opts);
  DenseState out;
  out.d = d;
  out.N = task.N;
  out.amplitudes = StateVector::Zero(dense_dimension(d, task.N, opts.cap));
  for (const LabeledTerm& term : task.terms) {
    const SchurBasisEntry* entry = basis.find(term.mu, task.sigma);
    if (!entry)
      throw InternalError("label " + term.mu.compressed_str() + " missing from basis");
    out.amplitudes += term.coefficient * entry->state.amplitudes;
  }
  if (std::abs(out.norm() - 1.0) > 1e-10)
    throw InternalError("prepared state is not normalized");
  return out;
}

DenseState prepare_first_quantized(const std::vector<FockState>& configs,
                                   const std::vector<cplx>& coeffs,
                                   const StatisticsSector& stat, int d, const SimOptions& opts) {
  return prepare_first_quantized(map_superposition(configs, coeffs, stat, d), d, opts);
}

}  // namespace schurprep
