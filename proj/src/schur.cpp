#include "sectoria/schur.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sectoria/errors.hpp"
#include "sectoria/linalg.hpp"

namespace sectoria {

BlockPartition::BlockPartition(std::size_t p, std::size_t n) : p_(p), n_(n) {
  if (n < 2 || p < 1 || p > n - 1) {
    throw MathError(ErrorKind::InvalidArgument, "partition p=" + std::to_string(p) +
                                                    " invalid for n=" + std::to_string(n));
  }
}

Blocks split_blocks(const ComplexMatrix& a, const BlockPartition& part) {
  require_square(a, "split_blocks");
  if (a.n() != part.n()) throw MathError(ErrorKind::DimensionMismatch, "partition size");
  const std::size_t p = part.p();
  const std::size_t q = part.trailing();
  return {a.block(0, 0, p, p), a.block(0, p, p, q), a.block(p, 0, q, p), a.block(p, p, q, q)};
}

ComplexMatrix schur_complement(const ComplexMatrix& a, const BlockPartition& part) {
  const Blocks b = split_blocks(a, part);
  const LuDecomposition lu(b.a11);
  if (lu.singular()) {
    throw MathError(ErrorKind::SingularLeadingBlock,
                    "leading " + std::to_string(part.p()) + "x" + std::to_string(part.p()) +
                        " block is singular");
  }
  return b.a22 - b.a21 * lu.solve(b.a12);
}

double inverse_block_identity(const ComplexMatrix& a, const BlockPartition& part) {
  const ComplexMatrix a_inv = inverse(a);
  const ComplexMatrix lhs = inverse(schur_complement(a, part));
  const ComplexMatrix rhs = a_inv.block(part.p(), part.p(), part.trailing(), part.trailing());
  return frobenius_distance(lhs, rhs) / a_inv.frobenius_norm();
}

namespace {

ComplexMatrix checked_inverse(const ComplexMatrix& m, const char* name) {
  const LuDecomposition lu(m);
  if (lu.singular()) {
    throw MathError(ErrorKind::SingularBlock, std::string(name) + " is singular");
  }
  return lu.inverse();
}

}  // namespace

CartesianSchurParts cartesian_schur_identity(const ComplexMatrix& a, const BlockPartition& part) {
  const CartesianPair mn = cartesian_split(a);
  if (!is_positive_definite(mn.real_part)) {
    throw MathError(ErrorKind::NotAccretive, "cartesian_schur_identity requires Re A > 0");
  }
  const Blocks m = split_blocks(mn.real_part, part);
  const Blocks nb = split_blocks(mn.imag_part, part);
  const ComplexMatrix m11_inv = checked_inverse(m.a11, "M11");
  const ComplexMatrix n11_inv = checked_inverse(nb.a11, "N11");
  const Complex i(0.0, 1.0);

  CartesianSchurParts out;
  out.m_part = m.a22 - m.a21 * m11_inv * m.a12;
  out.n_part = nb.a22 - nb.a21 * n11_inv * nb.a12;
  out.y_factor = m.a21 * m11_inv - nb.a21 * n11_inv;
  const ComplexMatrix middle = checked_inverse(m11_inv - i * n11_inv, "M11^-1 - i N11^-1");
  out.correction = out.y_factor * middle * out.y_factor.adjoint();

  const ComplexMatrix assembled = out.m_part + i * out.n_part + out.correction;
  out.residual = frobenius_distance(assembled, schur_complement(a, part));
  out.relative_residual = out.residual / a.frobenius_norm();
  return out;
}

double inverse_real_part_identity(const ComplexMatrix& a) {
  const CartesianPair parts = cartesian_split(a);
  if (!is_positive_definite(parts.real_part)) {
    throw MathError(ErrorKind::NotAccretive, "inverse_real_part_identity requires Re A > 0");
  }
  const ComplexMatrix a_inv = inverse(a);
  const ComplexMatrix inner =
      parts.real_part + parts.imag_part * inverse(parts.real_part) * parts.imag_part;
  return frobenius_distance(real_part(a_inv), inverse(inner)) / a_inv.frobenius_norm();
}

double determinant_quotient_residual(const ComplexMatrix& a, const BlockPartition& part) {
  const Complex whole = determinant(a);
  const Complex factored =
      determinant(a.block(0, 0, part.p(), part.p())) * determinant(schur_complement(a, part));
  return std::abs(whole - factored) /
         std::max(std::abs(whole), std::numeric_limits<double>::min());
}

}  // namespace sectoria
