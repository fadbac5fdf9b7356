// bijections.hpp -- the word transformations: phi1_inv and its computed
// inverse phi1, phi2, Steingrimsson's bijection on permutations, its
// extension gamma to words, and the block-reversing involution psi.

#pragma once

#include "fibwords/word.hpp"

namespace fibwords {

/// Foata's first fundamental transformation, inverted and restricted to
/// binary words. With block form (m, n, d):
///   1^{m_0} 2 1^{m_1-1} 2 ... 2 1^{m_d-1}  2^{n_0-1} 1 2^{n_1-1} ... 2^{n_{d-1}-1} 1 2^{n_d}
/// Words with no descent are fixed. Sends des to exc and preserves the
/// letter multiset.
BinaryWord phi1_inv(const BinaryWord& w);

/// Exact inverse of phi1_inv, recovered by structural parsing: with
/// k = ones_count(v) and d = number of 2s among the first k letters, the
/// prefix v[1..k] reads off m_0 and each m_i - 1, the suffix reads off the
/// 2-run exponents. Total on binary words; throws std::logic_error if the
/// parse ever desynchronizes (it cannot for binary input).
BinaryWord phi1(const BinaryWord& v);

/// Foata's second fundamental transformation restricted to binary words.
/// With block form (m, n, d):
///   1^{m_d-1} 2 1^{m_{d-1}-1} 2 ... 1^{m_1-1} 2 1^{m_0}  2^{n_0-1} 1 ... 2^{n_{d-1}-1} 1 2^{n_d}
/// Words with no descent are fixed. Sends (des, maj) to (exc, inv).
BinaryWord phi2(const BinaryWord& w);

/// Steingrimsson's bijection on permutations, built from the two assignment
/// rules with sentinel pi_0 = 0: for each k, if some later entry is smaller
/// than pi_k then f(pi_{k+1}) = pi_k, otherwise f(pi_{j+1}) = pi_k where j is
/// the largest index with pi_j < pi_k. Sends des to exc; descent pairs of pi
/// become excedance pairs of the image. Throws std::invalid_argument on the
/// empty permutation and std::logic_error if the assignment ever collides
/// (which would falsify the construction).
Permutation stein_phi(const Permutation& p);

/// Extension of stein_phi to arbitrary words via standardization: standardize,
/// apply stein_phi, then pull each rank back to the letter sitting at the
/// position with that rank. The empty word maps to itself. Sends des to exc
/// and preserves the letter multiset; not injective in general.
Word gamma(const Word& w);

/// gamma on binary words evaluated directly from the block exponents:
///   1^{m_0} 2 1^{m_1-1} ... 2 1^{m_{d-1}-1} 2 1^{m_d}  2^{n_0-1} 1 ... 2^{n_{d-2}-1} 1 2^{n_{d-1}-1+n_d}
/// Agrees with gamma on every binary word; words with no descent are fixed.
BinaryWord gamma_closed_form(const BinaryWord& w);

/// The involution that reverses the 1-run exponents around the descents:
/// (m_0,...,m_d) becomes (m_d - 1, m_{d-1}, ..., m_1, m_0 + 1) while the
/// 2-run exponents stay put. Words with no descent are fixed. Satisfies
/// psi(psi(w)) = w, preserves des, and phi2 = phi1_inv after psi.
BinaryWord psi(const BinaryWord& w);

}  // namespace fibwords
