#include "braidkit/braid_rep.hpp"

#include "braidkit/errors.hpp"

namespace braidkit {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

void require_valid(const BraidedObject& v) {
  AxiomReport r = check_yang_baxter(v);
  if (auto failed = r.first_failure()) {
    throw SpecViolation("braided object fails " + *failed);
  }
}

}  // namespace

ExactMatrix tensor_identity(const FieldSpec& field, std::size_t dim, std::size_t k) {
  return ExactMatrix::identity(field, ipow(dim, k));
}

BraidRep::BraidRep(BraidedObject v) : v_(std::move(v)) { require_valid(v_); }

ExactMatrix BraidRep::block(std::size_t m, std::size_t n) const {
  {
    std::lock_guard lock(mutex_);
    auto it = table_.find({m, n});
    if (it != table_.end()) return it->second;
  }
  ExactMatrix value = compute(m, n);
  std::lock_guard lock(mutex_);
  return table_.try_emplace({m, n}, std::move(value)).first->second;
}

ExactMatrix BraidRep::compute(std::size_t m, std::size_t n) const {
  const FieldSpec& f = v_.field();
  const std::size_t d = v_.dim();
  if (m == 0 || n == 0) return tensor_identity(f, d, m + n);
  if (m == 1 && n == 1) return v_.c();
  if (m == 1) {
    return kron(tensor_identity(f, d, 1), block(1, n - 1)) *
           kron(v_.c(), tensor_identity(f, d, n - 1));
  }
  return kron(block(1, n), tensor_identity(f, d, m - 1)) *
         kron(tensor_identity(f, d, 1), block(m - 1, n));
}

ExactMatrix cT(std::size_t m, std::size_t n, const BraidedObject& v) {
  return BraidRep(v).block(m, n);
}

namespace {

ExactMatrix oracle_column(std::size_t l, const BraidedObject& v) {
  // c^{l,1} = (c^{l-1,1}⊗V)(V^{⊗(l-1)}⊗c)
  const FieldSpec& f = v.field();
  ExactMatrix acc = tensor_identity(f, v.dim(), 1);
  for (std::size_t k = 1; k <= l; ++k) {
    if (k == 1) {
      acc = v.c();
    } else {
      acc = kron(acc, tensor_identity(f, v.dim(), 1)) *
            kron(tensor_identity(f, v.dim(), k - 1), v.c());
    }
  }
  return acc;
}

}  // namespace

ExactMatrix cT_oracle(std::size_t m, std::size_t n, const BraidedObject& v) {
  require_valid(v);
  const FieldSpec& f = v.field();
  const std::size_t d = v.dim();
  if (m == 0 || n == 0) return tensor_identity(f, d, m + n);
  const ExactMatrix column = oracle_column(m, v);
  // c^{m,k+1} = (V^{⊗k}⊗c^{m,1})(c^{m,k}⊗V)
  ExactMatrix acc = column;
  for (std::size_t k = 1; k < n; ++k) {
    acc = kron(tensor_identity(f, d, k), column) * kron(acc, tensor_identity(f, d, 1));
  }
  return acc;
}

bool check_hexagon(std::size_t l, std::size_t m, std::size_t n, const BraidRep& rep) {
  const FieldSpec& f = rep.source().field();
  const std::size_t d = rep.source().dim();
  auto id = [&](std::size_t k) { return tensor_identity(f, d, k); };
  const ExactMatrix lhs = kron(id(n), rep.block(l, m)) * kron(rep.block(l, n), id(m)) *
                          kron(id(l), rep.block(m, n));
  const ExactMatrix rhs = kron(rep.block(m, n), id(l)) * kron(id(m), rep.block(l, n)) *
                          kron(rep.block(l, m), id(n));
  return lhs == rhs;
}

}  // namespace braidkit
