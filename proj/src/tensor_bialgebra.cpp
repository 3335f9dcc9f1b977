#include "braidkit/tensor_bialgebra.hpp"

#include <string>

#include "braidkit/errors.hpp"

namespace braidkit {

namespace {

std::string idx(std::initializer_list<std::size_t> parts) {
  std::string s = "[";
  bool first = true;
  for (std::size_t p : parts) {
    s += (first ? "" : ",") + std::to_string(p);
    first = false;
  }
  return s + "]";
}

}  // namespace

std::map<TruncatedTensorBialgebra::BlockKey, ExactMatrix> coproduct_blocks(const BraidRep& braid,
                                                                         std::size_t degree) {
  const FieldSpec& f = braid.source().field();
  const std::size_t d = braid.source().dim();
  auto id = [&](std::size_t k) { return tensor_identity(f, d, k); };

  std::map<TruncatedTensorBialgebra::BlockKey, ExactMatrix> blocks;
  blocks.emplace(std::pair{std::size_t{0}, std::size_t{0}}, id(0));
  // Δ(w·v) = Δ(w)·(v⊗1 + 1⊗v) in the braided product of T⊗T.
  for (std::size_t n = 1; n <= degree; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      ExactMatrix block = ExactMatrix::zeros(f, id(n).rows(), id(n).cols());
      if (k <= n - 1) block += kron(blocks.at({k, n - 1}), id(1));
      if (k >= 1) {
        block += kron(id(k - 1), braid.block(n - k, 1)) * kron(blocks.at({k - 1, n - 1}), id(1));
      }
      blocks.emplace(std::pair{k, n}, std::move(block));
    }
  }
  return blocks;
}

TruncatedTensorBialgebra TruncatedTensorBialgebra::build(const BraidedObject& v,
                                                         std::size_t degree) {
  if (degree < 1) throw BadTruncation("truncation degree must be at least 1");
  auto braid = std::make_shared<const BraidRep>(v);
  TruncatedTensorBialgebra t(braid, degree);
  t.delta_ = coproduct_blocks(*braid, degree);
  return t;
}

TruncatedTensorBialgebra TruncatedTensorBialgebra::from_blocks(
    const BraidedObject& v, std::size_t degree, std::map<BlockKey, ExactMatrix> delta_blocks) {
  if (degree < 1) throw BadTruncation("truncation degree must be at least 1");
  TruncatedTensorBialgebra t(std::make_shared<const BraidRep>(v), degree);
  for (std::size_t n = 0; n <= degree; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      auto it = delta_blocks.find({k, n});
      if (it == delta_blocks.end()) {
        throw ShapeError("missing coproduct block delta/" + std::to_string(k) + "_" +
                         std::to_string(n));
      }
      const std::size_t size = t.piece_dim(n);
      if (it->second.rows() != size || it->second.cols() != size) {
        throw ShapeError("coproduct block delta/" + std::to_string(k) + "_" + std::to_string(n) +
                         " has the wrong shape");
      }
      if (!(it->second.field() == v.field())) throw FieldMismatch("coproduct block field");
    }
  }
  t.delta_ = std::move(delta_blocks);
  return t;
}

std::size_t TruncatedTensorBialgebra::piece_dim(std::size_t n) const {
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= dim();
  return r;
}

const ExactMatrix& TruncatedTensorBialgebra::delta(std::size_t k, std::size_t n) const {
  if (k > n || n > degree_) {
    throw BadDegree("coproduct block (" + std::to_string(k) + "," + std::to_string(n) +
                    ") outside truncation degree " + std::to_string(degree_));
  }
  return delta_.at({k, n});
}

TruncatedTensorBialgebra TruncatedTensorBialgebra::with_delta(std::size_t k, std::size_t n,
                                                              ExactMatrix block) const {
  const ExactMatrix& old = delta(k, n);
  if (block.rows() != old.rows() || block.cols() != old.cols()) {
    throw ShapeError("replacement coproduct block has the wrong shape");
  }
  TruncatedTensorBialgebra copy = *this;
  copy.delta_.at({k, n}) = std::move(block);
  return copy;
}

ExactMatrix TruncatedTensorBialgebra::counit(std::size_t n) const {
  if (n == 0) return ExactMatrix::identity(field(), 1);
  return ExactMatrix::zeros(field(), 1, piece_dim(n));
}

ExactMatrix TruncatedTensorBialgebra::unit() const { return ExactMatrix::identity(field(), 1); }

ExactMatrix TruncatedTensorBialgebra::product_block(std::size_t a, std::size_t b) const {
  if (a + b > degree_) {
    throw TruncationOverflow("product of degrees " + std::to_string(a) + " and " +
                             std::to_string(b) + " exceeds truncation degree " +
                             std::to_string(degree_));
  }
  return ExactMatrix::identity(field(), piece_dim(a + b));
}

ExactMatrix TruncatedTensorBialgebra::multiply(const ExactMatrix& w1, std::size_t a,
                                               const ExactMatrix& w2, std::size_t b) const {
  if (w1.rows() != piece_dim(a) || w1.cols() != 1 || w2.rows() != piece_dim(b) ||
      w2.cols() != 1) {
    throw ShapeError("multiply expects column vectors of the stated degrees");
  }
  return product_block(a, b) * kron(w1, w2);
}

ExactMatrix TruncatedTensorBialgebra::global_braiding_block(std::size_t m, std::size_t n) const {
  if (m > degree_ || n > degree_) {
    throw BadDegree("braiding block (" + std::to_string(m) + "," + std::to_string(n) +
                    ") outside truncation degree " + std::to_string(degree_));
  }
  return braid_->block(m, n);
}

AxiomReport check_truncated_axioms(const TruncatedTensorBialgebra& t) {
  const std::size_t N = t.degree();
  const FieldSpec& f = t.field();
  const std::size_t d = t.dim();
  const BraidRep& br = t.braid();
  auto id = [&](std::size_t k) { return tensor_identity(f, d, k); };
  auto c = [&](std::size_t m, std::size_t n) { return br.block(m, n); };
  auto eps = [&](std::size_t n) { return t.counit(n); };

  AxiomReport r("blockwise, total degree <= " + std::to_string(N));

  // Braided object and braided algebra laws on T⊗T⊗T blocks (a, b, e).
  for (std::size_t a = 0; a <= N; ++a) {
    for (std::size_t b = 0; a + b <= N; ++b) {
      for (std::size_t e = 0; a + b + e <= N; ++e) {
        r.expect_equal("qybe" + idx({a, b, e}),
                       kron(c(b, e), id(a)) * kron(id(b), c(a, e)) * kron(c(a, b), id(e)),
                       kron(id(e), c(a, b)) * kron(c(a, e), id(b)) * kron(id(a), c(b, e)));
        r.expect_equal("Br2" + idx({a, b, e}), c(a + b, e),
                       kron(c(a, e), id(b)) * kron(id(a), c(b, e)));
        r.expect_equal("Br3" + idx({a, b, e}), c(a, b + e),
                       kron(id(b), c(a, e)) * kron(c(a, b), id(e)));
      }
    }
  }
  for (std::size_t a = 0; a <= N; ++a) {
    r.expect_equal("Br4_left" + idx({a}), c(0, a), id(a));
    r.expect_equal("Br4_right" + idx({a}), c(a, 0), id(a));
  }

  // Coalgebra laws on each degree n, target (i, j, k) with i + j + k = n.
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; i + j <= n; ++j) {
        const std::size_t k = n - i - j;
        r.expect_equal("coassociativity" + idx({i, j, k}),
                       kron(t.delta(i, i + j), id(k)) * t.delta(i + j, n),
                       kron(id(i), t.delta(j, j + k)) * t.delta(i, n));
      }
    }
    r.expect_equal("counit_left" + idx({n}), kron(eps(0), id(n)) * t.delta(0, n), id(n));
    r.expect_equal("counit_right" + idx({n}), kron(id(n), eps(0)) * t.delta(n, n), id(n));
  }

  // Braided coalgebra laws on T⊗T blocks (a, b).
  for (std::size_t a = 0; a <= N; ++a) {
    for (std::size_t b = 0; a + b <= N; ++b) {
      for (std::size_t k = 0; k <= b; ++k) {
        r.expect_equal("Br5" + idx({a, b, k}), kron(t.delta(k, b), id(a)) * c(a, b),
                       kron(id(k), c(a, b - k)) * kron(c(a, k), id(b - k)) *
                           kron(id(a), t.delta(k, b)));
      }
      for (std::size_t k = 0; k <= a; ++k) {
        r.expect_equal("Br6" + idx({a, b, k}), kron(id(b), t.delta(k, a)) * c(a, b),
                       kron(c(k, b), id(a - k)) * kron(id(k), c(a - k, b)) *
                           kron(t.delta(k, a), id(b)));
      }
      r.expect_equal("Br7_left" + idx({a, b}), kron(eps(b), id(a)) * c(a, b),
                     kron(id(a), eps(b)));
      r.expect_equal("Br7_right" + idx({a, b}), kron(id(b), eps(a)) * c(a, b),
                     kron(eps(a), id(b)));
    }
  }

  // Compatibility Δ∘m = (m⊗m)(T⊗c_T⊗T)(Δ⊗Δ) on degrees (a, b), target split k.
  for (std::size_t a = 0; a <= N; ++a) {
    for (std::size_t b = 0; a + b <= N; ++b) {
      for (std::size_t k = 0; k <= a + b; ++k) {
        ExactMatrix rhs = ExactMatrix::zeros(f, t.piece_dim(a + b), t.piece_dim(a + b));
        for (std::size_t i = (k > b ? k - b : 0); i <= a && i <= k; ++i) {
          const std::size_t j = k - i;
          rhs += kron(kron(id(i), c(a - i, j)), id(b - j)) *
                 kron(t.delta(i, a), t.delta(j, b));
        }
        r.expect_equal("Br1[" + std::to_string(a) + "," + std::to_string(b) + "->" +
                           std::to_string(k) + "]",
                       t.delta(k, a + b) * t.product_block(a, b), rhs);
      }
    }
  }
  r.expect_equal("Br8", t.delta(0, 0) * t.unit(), kron(t.unit(), t.unit()));
  for (std::size_t a = 0; a <= N; ++a) {
    for (std::size_t b = 0; a + b <= N; ++b) {
      r.expect_equal("Br9" + idx({a, b}), eps(a + b) * t.product_block(a, b),
                     kron(eps(a), eps(b)));
    }
  }
  r.expect_equal("Br10", eps(0) * t.unit(), ExactMatrix::identity(f, 1));
  return r;
}

}  // namespace braidkit
