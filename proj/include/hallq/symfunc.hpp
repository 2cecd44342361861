#pragma once

#include <map>

#include "hallq/partitions.hpp"
#include "hallq/ratq.hpp"
#include "hallq/xlaurent.hpp"

namespace hallq {

using PPoint = XLaurent::Point;  // c * t^tpow

// point-list builders
std::vector<PPoint> points_all_ones(size_t count);
// x1, 1/x1, ..., xn, 1/xn
std::vector<PPoint> points_pm(const std::vector<Rat> &x);
// u, 1/u, u, ... (count entries)
std::vector<PPoint> points_alternating(const PPoint &u, size_t count);

// ---- classical bases ------------------------------------------------------

XLaurent schur(const Partition &la, size_t n);
// sp_{2n,lambda} and so_{2n+1,lambda} (half-partitions allowed for so)
XLaurent symplectic_schur(const Partition &la, size_t n);
XLaurent odd_orthogonal_schur(const Partition &la, size_t n);

// Weyl denominators as explicit Laurent polynomials
XLaurent delta_c(size_t n);
XLaurent delta_b(size_t n);
// determinant numerators Delta * schur, used directly by lattice sums
XLaurent symp_weyl_numer(const Partition &la, size_t n);
XLaurent so_odd_weyl_numer(const Partition &la, size_t n);

// ---- Hall-Littlewood ------------------------------------------------------

XLaurent hall_littlewood_p(const Partition &la, size_t n, int order);
XLaurent hall_littlewood_q(const Partition &la, size_t n, int order);

enum class QprimeMethod { Charge, Jing, Multisum, Fermionic };

XLaurent qprime(const Partition &mu, size_t n, QprimeMethod method, int order);
XLaurent pprime(const Partition &mu, size_t n, QprimeMethod method, int order);

// P'_mu at an explicit point list (fermionic recursion; safe at repeated
// points such as all-ones)
QSeries pprime_at(const Partition &mu, const std::vector<PPoint> &pts, int order);
// same with q -> q^k (k = 2 gives the base-q^2 sums)
QSeries pprime_at_qpow(const Partition &mu, const std::vector<PPoint> &pts, int order, int qpow);

// Garsia's raising-operator form of the q-Bernstein operator
XLaurent bernstein_b(long m, const XLaurent &f, size_t n, int order);

// hypergeometric term f^{(tau)}_{r,s}(x;q) at monomial-rational points
QSeries f_tau(const MultiIndex &r, const MultiIndex &s, long tau,
              const std::vector<PPoint> &x, int order);

// ---- Rogers-Szego ---------------------------------------------------------

// H_m(z;q) for a series argument
QSeries rogers_szego(long m, const QSeries &z, int order);
// z^m H_m(w/z;q) written division-free: sum_k w^k z^(m-k) [m k]
QSeries rogers_szego_sym(long m, const QSeries &w, const QSeries &z, int order);
// h_lambda(z;q) = prod_i H_{m_i}(z;q)
QSeries h_lambda(const Partition &la, const QSeries &z, int order);
// h^{(m)}_lambda(w,z;q); requires lambda_1 <= 2m
QSeries h_m_weight(const Partition &la, long m, const QSeries &w, const QSeries &z, int order);

// ---- Schur expansion / Hall pairing ----------------------------------------

// expansion of a symmetric polynomial in Schur functions (degree <= n)
std::map<Partition, QSeries> schur_expand(const XLaurent &f, size_t n);
QSeries hall_pairing(const XLaurent &f, const XLaurent &g, size_t n);

// ---- rational-arithmetic property kernels ----------------------------------

// sum_i (1 - y_i) prod_{j != i} (x_i - y_j x_j)/(x_i - x_j);  equals
// 1 - y_1...y_n identically
Rat milne_sum_lhs(const std::vector<Rat> &x, const std::vector<Rat> &y);

// terminating A_{n-1} q-binomial sum Phi(q^{-N}; x) and its product form
Rat milne_qbinom_lhs(const std::vector<long> &N, const std::vector<Rat> &x, const Rat &q);
Rat milne_qbinom_rhs(const std::vector<long> &N, const std::vector<Rat> &x, const Rat &q);

}  // namespace hallq
