// Copyright 2026 The szx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "szx/tensor.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include <Eigen/Dense>

namespace szx::tn {

Tensor Tensor::scalar(cd value) { return Tensor{{}, {value}}; }

Tensor permute(const Tensor& t, const std::vector<int>& order) {
  const std::size_t r = t.rank();
  if (order.size() != r) throw SzxError(ErrorCode::InvalidArgument, "permute: rank");
  if (order == t.legs) return t;
  // pos[i]: position in t of the leg that ends up at position i.
  std::vector<int> pos(r);
  std::vector<bool> used(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < r; ++j) {
      if (!used[j] && t.legs[j] == order[i]) {
        pos[i] = static_cast<int>(j);
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) throw SzxError(ErrorCode::InvalidArgument, "permute: missing leg");
  }
  Tensor out{order, std::vector<cd>(t.data.size())};
  const std::size_t n = t.data.size();
  // Stride in the source index for each destination bit.
  std::vector<std::size_t> stride(r);
  for (std::size_t i = 0; i < r; ++i) stride[i] = std::size_t{1} << (r - 1 - static_cast<std::size_t>(pos[i]));
  for (std::size_t dst = 0; dst < n; ++dst) {
    std::size_t src = 0;
    for (std::size_t i = 0; i < r; ++i)
      if ((dst >> (r - 1 - i)) & 1U) src |= stride[i];
    out.data[dst] = t.data[src];
  }
  return out;
}

Tensor trace_repeated(Tensor t) {
  while (true) {
    int a = -1;
    int b = -1;
    for (std::size_t i = 0; i < t.rank() && a < 0; ++i)
      for (std::size_t j = i + 1; j < t.rank(); ++j)
        if (t.legs[i] == t.legs[j]) {
          a = static_cast<int>(i);
          b = static_cast<int>(j);
          break;
        }
    if (a < 0) return t;
    const std::size_t r = t.rank();
    Tensor out;
    for (std::size_t i = 0; i < r; ++i)
      if (static_cast<int>(i) != a && static_cast<int>(i) != b) out.legs.push_back(t.legs[i]);
    out.data.assign(std::size_t{1} << out.legs.size(), cd{0, 0});
    const std::size_t ma = std::size_t{1} << (r - 1 - static_cast<std::size_t>(a));
    const std::size_t mb = std::size_t{1} << (r - 1 - static_cast<std::size_t>(b));
    for (std::size_t src = 0; src < t.data.size(); ++src) {
      const bool ba = (src & ma) != 0;
      const bool bb = (src & mb) != 0;
      if (ba != bb) continue;
      std::size_t dst = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (static_cast<int>(i) == a || static_cast<int>(i) == b) continue;
        dst = (dst << 1) | ((src >> (r - 1 - i)) & 1U);
      }
      out.data[dst] += t.data[src];
    }
    t = std::move(out);
  }
}

Tensor contract(const Tensor& a, const Tensor& b) {
  std::vector<int> shared;
  std::vector<int> fa;
  std::vector<int> fb;
  for (int l : a.legs) {
    if (std::find(b.legs.begin(), b.legs.end(), l) != b.legs.end()) shared.push_back(l);
    else fa.push_back(l);
  }
  for (int l : b.legs)
    if (std::find(a.legs.begin(), a.legs.end(), l) == a.legs.end()) fb.push_back(l);

  std::vector<int> oa = fa;
  oa.insert(oa.end(), shared.begin(), shared.end());
  std::vector<int> ob = shared;
  ob.insert(ob.end(), fb.begin(), fb.end());
  const Tensor pa = permute(a, oa);
  const Tensor pb = permute(b, ob);

  const Eigen::Index rows = Eigen::Index{1} << fa.size();
  const Eigen::Index inner = Eigen::Index{1} << shared.size();
  const Eigen::Index cols = Eigen::Index{1} << fb.size();
  // Row-major views: index = row * inner + k.
  using RowMat = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMat> ma(pa.data.data(), rows, inner);
  Eigen::Map<const RowMat> mb(pb.data.data(), inner, cols);
  Tensor out;
  out.legs = fa;
  out.legs.insert(out.legs.end(), fb.begin(), fb.end());
  out.data.resize(static_cast<std::size_t>(rows * cols));
  Eigen::Map<RowMat> mo(out.data.data(), rows, cols);
  mo.noalias() = ma * mb;
  return out;
}

Tensor contract_network(std::vector<Tensor> tensors, const std::vector<int>& open) {
  for (auto& t : tensors) t = trace_repeated(std::move(t));
  if (tensors.empty()) tensors.push_back(Tensor::scalar(1.0));

  auto result_rank = [](const Tensor& a, const Tensor& b, int* shared_out) {
    int shared = 0;
    for (int l : a.legs)
      if (std::find(b.legs.begin(), b.legs.end(), l) != b.legs.end()) ++shared;
    *shared_out = shared;
    return static_cast<int>(a.rank() + b.rank()) - 2 * shared;
  };

  while (tensors.size() > 1) {
    int best_i = -1;
    int best_j = -1;
    int best_rank = std::numeric_limits<int>::max();
    bool best_shares = false;
    for (std::size_t i = 0; i < tensors.size(); ++i) {
      for (std::size_t j = i + 1; j < tensors.size(); ++j) {
        int shared = 0;
        const int r = result_rank(tensors[i], tensors[j], &shared);
        const bool shares = shared > 0;
        // Prefer pairs that share legs; outer products only as a last resort.
        if ((shares && !best_shares) || (shares == best_shares && r < best_rank)) {
          best_i = static_cast<int>(i);
          best_j = static_cast<int>(j);
          best_rank = r;
          best_shares = shares;
        }
      }
    }
    Tensor merged = contract(tensors[static_cast<std::size_t>(best_i)], tensors[static_cast<std::size_t>(best_j)]);
    tensors.erase(tensors.begin() + best_j);
    tensors[static_cast<std::size_t>(best_i)] = std::move(merged);
  }
  Tensor t = std::move(tensors.front());
  if (t.rank() != open.size()) throw SzxError(ErrorCode::InvalidArgument, "network has unmatched legs");
  return permute(t, open);
}

}  // namespace szx::tn
