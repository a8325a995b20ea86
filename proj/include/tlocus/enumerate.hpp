#pragma once

#include "tlocus/egraph.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tlocus {

/// Without a cap, graphs with more edges than this are refused.
inline constexpr std::size_t kEnumerationEdgeLimit = 24;
/// Masks are 64-bit; beyond this even a capped enumeration is impossible.
inline constexpr std::size_t kMaskEdgeLimit = 63;

class EnumerationLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precomputed edge endpoints for fast weak-reversibility tests on edge
/// subsets of one graph.
class SubsetChecker {
public:
    explicit SubsetChecker(const EGraph& g);
    bool weakly_reversible(std::uint64_t mask) const;

private:
    std::vector<std::uint8_t> source_;
    std::vector<std::uint8_t> target_;
    std::size_t vertices_;
};

/// Masks (bit e = edge e) of every nonempty weakly reversible edge subset,
/// in ascending order, truncated to `cap` entries when given.
/// Serial reference implementation.
std::vector<std::uint64_t> wr_subgraph_masks_serial(const EGraph& g, std::optional<std::size_t> cap = std::nullopt);

/// Same result as the serial version; the mask range is split into chunks
/// scanned with OpenMP and merged in chunk order.
std::vector<std::uint64_t> wr_subgraph_masks(const EGraph& g, std::optional<std::size_t> cap = std::nullopt);

/// Streams the subgraphs in ascending mask order; the callback returns false
/// to stop early.
void for_each_wr_subgraph(const EGraph& g, std::optional<std::size_t> cap,
                          const std::function<bool(std::uint64_t, const EGraph&)>& visit);

std::vector<EGraph> enumerate_wr_subgraphs(const EGraph& g, std::optional<std::size_t> cap = std::nullopt);

} // namespace tlocus
