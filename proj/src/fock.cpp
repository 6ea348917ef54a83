#include "fspt/fock.hpp"

#include <string>
#include <vector>

#include "fspt/error.hpp"

namespace fspt {

Mat fock_parity(int d) {
  const Eigen::Index n = Eigen::Index(1) << d;
  Mat p = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) p(i, i) = parity(static_cast<std::uint64_t>(i)) ? -1.0 : 1.0;
  return p;
}

SymOp second_quantize(const Mat& u, int flag, double tol) {
  if (!is_unitary(u, tol)) throw Error("NotUnitary", "one-particle operator is not unitary");
  const int d = static_cast<int>(u.rows());
  const Eigen::Index n = Eigen::Index(1) << d;
  Mat f = Mat::Zero(n, n);
  for (Eigen::Index mu = 0; mu < n; ++mu)
    for (Eigen::Index nu = 0; nu < n; ++nu) {
      const auto a = static_cast<std::uint64_t>(mu), b = static_cast<std::uint64_t>(nu);
      if (__builtin_popcountll(a) != __builtin_popcountll(b)) continue;
      std::vector<int> rows, cols;
      for (int i = 0; i < d; ++i) {
        if (a >> i & 1) rows.push_back(i);
        if (b >> i & 1) cols.push_back(i);
      }
      const auto k = static_cast<Eigen::Index>(rows.size());
      if (k == 0) {
        f(mu, nu) = 1.0;
        continue;
      }
      Mat sub(k, k);
      for (Eigen::Index r = 0; r < k; ++r)
        for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = u(rows[r], cols[c]);
      f(mu, nu) = sub.determinant();
    }
  return SymOp{f, flag};
}

Mat jw_embed(std::uint64_t mu, std::uint64_t nu, int site, int length, int d) {
  if (site < 0 || site >= length) throw Error("IndexOutOfRange", "site " + std::to_string(site));
  const std::uint64_t local = std::uint64_t(1) << d;
  if (mu >= local || nu >= local) throw Error("IndexOutOfRange", "occupation mask exceeds 2^d");
  if (d * length > 14) throw Error("SizeTooLarge", "d*L must be at most 14");

  Mat e = Mat::Zero(static_cast<Eigen::Index>(local), static_cast<Eigen::Index>(local));
  e(static_cast<Eigen::Index>(mu), static_cast<Eigen::Index>(nu)) = 1.0;
  const bool odd = parity(mu) != parity(nu);
  const Mat p = fock_parity(d);
  const Mat id = identity(static_cast<Eigen::Index>(local));

  Mat out = Mat::Identity(1, 1);
  for (int x = 0; x < length; ++x) {
    if (x < site)
      out = kron(out, odd ? p : id);
    else if (x == site)
      out = kron(out, e);
    else
      out = kron(out, id);
  }
  return out;
}

}  // namespace fspt
