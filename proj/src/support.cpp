#include "surfbasis/support.hpp"

#include <string>

#include "surfbasis/errors.hpp"
#include "surfbasis/gf2_matrix.hpp"

namespace surfbasis {

namespace {

class Engine {
 public:
  Engine(std::size_t dim, const std::function<BitVec(const BitVec&, std::size_t)>& select, const SupportOptions& opt,
         SupportStats& stats)
      : select_(select), opt_(opt), stats_(stats), cycles_(dim) {
    for (std::size_t i = 0; i < dim; ++i) support_.push_back(BitVec::unit(dim, i));
  }

  void extend(std::size_t j, std::size_t k) {
    if (k == 1) {
      BitVec c = select_(support_[j], j);
      if (c.size() != support_[j].size() || !dot(support_[j], c)) {
        throw InternalError("support recursion: selected cycle is not odd against its support vector");
      }
      cycles_[j] = std::move(c);
      ++stats_.selections;
      return;
    }
    std::size_t h = opt_.recursion == Recursion::Balanced ? k / 2 : 1;
    extend(j, h);
    update(j, k, h);
    extend(j + h, k - h);
  }

  std::vector<BitVec> take() { return std::move(cycles_); }

 private:
  // Make S_{j+h} .. S_{j+k-1} orthogonal to the cycles chosen at j .. j+h-1.
  void update(std::size_t j, std::size_t k, std::size_t h) {
    BitMatrix x(h, h), y(k - h, h);
    for (std::size_t a = 0; a < h; ++a) {
      for (std::size_t b = 0; b < h; ++b) x.set(a, b, dot(support_[j + a], cycles_[j + b]));
    }
    for (std::size_t a = 0; a < k - h; ++a) {
      for (std::size_t b = 0; b < h; ++b) y.set(a, b, dot(support_[j + h + a], cycles_[j + b]));
    }
    BitMatrix coeff = mat_mul(y, mat_inverse(x));
    for (std::size_t a = 0; a < k - h; ++a) {
      const BitVec& row = coeff.row(a);
      for (std::size_t b = row.find_first(); b < row.size(); b = row.find_next(b + 1)) {
        support_[j + h + a] ^= support_[j + b];
      }
    }
    ++stats_.updates;
    if (opt_.check_invariants) check(j, k, h);
  }

  void check(std::size_t j, std::size_t k, std::size_t h) {
    ++stats_.invariant_checks;
    if (rank(support_) != support_.size()) {
      throw InternalError("support recursion: support vectors lost full rank");
    }
    for (std::size_t t = j + h; t < j + k; ++t) {
      for (std::size_t u = 0; u < j + h; ++u) {
        if (dot(support_[t], cycles_[u])) {
          throw InternalError("support recursion: S_" + std::to_string(t) + " not orthogonal to cycle " +
                              std::to_string(u));
        }
      }
    }
  }

  const std::function<BitVec(const BitVec&, std::size_t)>& select_;
  const SupportOptions& opt_;
  SupportStats& stats_;
  std::vector<BitVec> support_;
  std::vector<BitVec> cycles_;
};

}  // namespace

std::vector<BitVec> support_recursion(std::size_t dimension,
                                      const std::function<BitVec(const BitVec&, std::size_t)>& select,
                                      const SupportOptions& options, SupportStats* stats) {
  SupportStats local;
  SupportStats& st = stats != nullptr ? *stats : local;
  if (dimension == 0) return {};
  Engine engine(dimension, select, options, st);
  engine.extend(0, dimension);
  return engine.take();
}

}  // namespace surfbasis
