#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lfkmsd/cover.hpp"

namespace lfkmsd {

struct ScaleResult;

/// Normalized mutual information between two covers that may overlap, in
/// the Lancichinetti-Fortunato-Kertesz form.
///
/// Each community is a binary indicator over the `node_count` nodes. For a
/// community X_k the conditional entropy H(X_k | Y_l) is taken against every
/// Y_l whose joint distribution is positively related, i.e.
/// h(P11) + h(P00) >= h(P01) + h(P10); the best such match, divided by
/// H(X_k), is averaged over k. Without an admissible match the normalized
/// term is 1. NMI = 1 - (<H(X|Y)>_norm + <H(Y|X)>_norm) / 2, base-2 logs,
/// 0 log 0 = 0.
///
/// A community spanning every node has H(X_k) = 0; its normalized term is 0
/// when some match is admissible and 1 otherwise. Two empty covers give 1;
/// exactly one empty cover gives 0.
///
/// Throws InvalidArgument if a node id is >= node_count or a community is empty.
double overlapping_nmi(const CoverSets& x, const CoverSets& y, std::size_t node_count);

/// For each scale s, the mean NMI between cover s and covers s+1 .. s+p-1
/// (those that exist); empty for the last scale. Throws if p < 2.
std::vector<std::optional<double>> windowed_nmi(std::span<const CoverSets> covers,
                                                std::size_t node_count, std::size_t p);
std::vector<std::optional<double>> windowed_nmi(std::span<const ScaleResult> results,
                                                std::size_t node_count, std::size_t p);

/// NMI of each scale's cover against `reference`.
std::vector<double> reference_nmi(std::span<const CoverSets> covers, const CoverSets& reference,
                                  std::size_t node_count);
std::vector<double> reference_nmi(std::span<const ScaleResult> results, const CoverSets& reference,
                                  std::size_t node_count);

}  // namespace lfkmsd
