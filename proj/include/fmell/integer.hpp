#ifndef FMELL_INTEGER_HPP
#define FMELL_INTEGER_HPP

// Arbitrary-precision scalars and the Eigen dense types built on them.
//
// Eigen must be seen before cpp_int: Boost 1.74 probes every type with a
// const_iterator as a potential byte container, which breaks on Eigen 3.4
// expressions. The specializations below switch that probe off.

#include <Eigen/Core>

#include <boost/multiprecision/cpp_int.hpp>

#include <type_traits>

namespace boost::multiprecision::detail {
template <class S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : std::false_type {};
template <class D>
struct is_byte_container<Eigen::MatrixBase<D>> : std::false_type {};
template <class D>
struct is_byte_container<Eigen::DenseBase<D>> : std::false_type {};
template <class L, class R, int O>
struct is_byte_container<Eigen::Product<L, R, O>> : std::false_type {};
template <class Op, class X>
struct is_byte_container<Eigen::CwiseUnaryOp<Op, X>> : std::false_type {};
template <class Op, class L, class R>
struct is_byte_container<Eigen::CwiseBinaryOp<Op, L, R>> : std::false_type {};
template <class Op, class M>
struct is_byte_container<Eigen::CwiseNullaryOp<Op, M>> : std::false_type {};
template <class X, int R, int C, bool I>
struct is_byte_container<Eigen::Block<X, R, C, I>> : std::false_type {};
template <class X>
struct is_byte_container<Eigen::Transpose<X>> : std::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <string>
#include <tuple>

namespace fmell {

// Expression templates are off so that arithmetic yields plain values inside
// Eigen kernels and std algorithms.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix2Z = Matrix2<Integer>;
using Vector2Z = Vector2<Integer>;
using MatrixZ = MatrixX<Integer>;
using VectorZ = VectorX<Integer>;

/// Result of the extended Euclidean algorithm: x*u + y*v == g, g >= 0.
struct Bezout {
  Integer g;
  Integer u;
  Integer v;
};

Bezout extended_gcd(const Integer& x, const Integer& y);

Integer gcd(const Integer& x, const Integer& y);

/// Floor division; the divisor must be nonzero.
Integer floor_div(const Integer& num, const Integer& den);

/// Representative of num modulo m in [0, |m|).
Integer mod_floor(const Integer& num, const Integer& m);

/// Inverse of x modulo m (m > 0) in [0, m). Throws DomainError when gcd(x, m) != 1.
Integer inverse_mod(const Integer& x, const Integer& m);

/// Symmetric bilinear pairing u^T G v.
template <typename DerivedG, typename DerivedU, typename DerivedV>
typename DerivedG::Scalar pairing(const Eigen::MatrixBase<DerivedG>& gram,
                                  const Eigen::MatrixBase<DerivedU>& u,
                                  const Eigen::MatrixBase<DerivedV>& v) {
  return u.dot(gram * v);
}

/// Canonical decimal rendering (no leading '+', no padding).
std::string to_string(const Integer& x);

/// "p/q" with q > 0, or "p" when integral.
std::string to_string(const Rational& x);

}  // namespace fmell

#endif  // FMELL_INTEGER_HPP
