#include "linsds/cut.hpp"

#include <algorithm>
#include <string>

#include "linsds/rng.hpp"
#include "linsds/word_sds.hpp"

namespace linsds {

ChainPartition::ChainPartition(Poset poset, std::vector<std::vector<std::size_t>> chains)
    : poset_(std::move(poset)), chains_(std::move(chains)) {
    std::size_t n = poset_.size();
    std::vector<char> seen(n, 0);
    for (std::size_t c = 0; c < chains_.size(); ++c) {
        const auto& chain = chains_[c];
        if (chain.empty()) {
            throw Error(errc::invalid_partition, "chain " + std::to_string(c) + " is empty");
        }
        for (std::size_t x : chain) {
            if (x >= n) {
                throw Error(errc::invalid_partition,
                            "chain element " + std::to_string(x) + " out of range");
            }
            if (seen[x]) {
                throw Error(errc::invalid_partition,
                            "element " + std::to_string(x) + " appears in two chains");
            }
            seen[x] = 1;
        }
        for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
            if (!poset_.less(chain[t], chain[t + 1])) {
                throw Error(errc::invalid_partition,
                            "chain " + std::to_string(c) + " is not strictly ascending at " +
                                std::to_string(chain[t]) + " < " + std::to_string(chain[t + 1]));
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (!seen[x]) {
            throw Error(errc::invalid_partition,
                        "element " + std::to_string(x) + " is not covered by any chain");
        }
    }

    std::size_t k = chains_.size();
    comparable_.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) {
                comparable_[i * k + j] = 1;
                continue;
            }
            std::size_t pairs = 0;
            for (std::size_t x : chains_[i]) {
                for (std::size_t y : chains_[j]) {
                    if (poset_.comparable(x, y)) ++pairs;
                }
            }
            if (pairs != 0 && pairs != chains_[i].size() * chains_[j].size()) {
                throw Error(errc::invalid_partition,
                            "comparability between chains " + std::to_string(i) + " and " +
                                std::to_string(j) + " is partial (" + std::to_string(pairs) +
                                " of " + std::to_string(chains_[i].size() * chains_[j].size()) +
                                " pairs)");
            }
            comparable_[i * k + j] = pairs ? 1 : 0;
        }
    }
}

std::vector<std::size_t> ChainPartition::block_order() const {
    std::vector<std::size_t> order;
    order.reserve(poset_.size());
    for (const auto& chain : chains_) order.insert(order.end(), chain.begin(), chain.end());
    return order;
}

std::vector<std::size_t> ChainPartition::chain_sizes() const {
    std::vector<std::size_t> sizes;
    sizes.reserve(chains_.size());
    for (const auto& chain : chains_) sizes.push_back(chain.size());
    return sizes;
}

Cut::Cut(ChainPartition partition, std::vector<std::size_t> positions)
    : partition_(std::move(partition)), positions_(std::move(positions)) {
    const auto& chains = partition_.chains();
    if (positions_.size() != chains.size()) {
        throw Error(errc::invalid_cut, "need one cut position per chain");
    }
    for (std::size_t i = 0; i < chains.size(); ++i) {
        if (positions_[i] > chains[i].size()) {
            throw Error(errc::invalid_cut, "cut position " + std::to_string(positions_[i]) +
                                               " exceeds chain " + std::to_string(i) + " length " +
                                               std::to_string(chains[i].size()));
        }
    }
    const Poset& p = partition_.poset();
    for (std::size_t i = 0; i < chains.size(); ++i) {
        for (std::size_t a = 0; a < positions_[i]; ++a) {
            std::size_t x = chains[i][a];
            for (std::size_t j = 0; j < chains.size(); ++j) {
                for (std::size_t b = positions_[j]; b < chains[j].size(); ++b) {
                    std::size_t y = chains[j][b];
                    if (p.comparable(x, y) && !p.less(x, y)) {
                        throw Error(errc::invalid_cut,
                                    "low element " + std::to_string(x) +
                                        " is not below comparable up element " + std::to_string(y));
                    }
                }
            }
        }
    }
}

std::vector<std::size_t> Cut::side_elements(CutSide side) const {
    std::vector<std::size_t> out;
    const auto& chains = partition_.chains();
    for (std::size_t i = 0; i < chains.size(); ++i) {
        std::size_t begin = side == CutSide::kLow ? 0 : positions_[i];
        std::size_t end = side == CutSide::kLow ? positions_[i] : chains[i].size();
        for (std::size_t t = begin; t < end; ++t) out.push_back(chains[i][t]);
    }
    return out;
}

std::vector<std::size_t> Cut::side_sizes(CutSide side) const {
    std::vector<std::size_t> out;
    const auto& chains = partition_.chains();
    for (std::size_t i = 0; i < chains.size(); ++i) {
        out.push_back(side == CutSide::kLow ? positions_[i] : chains[i].size() - positions_[i]);
    }
    return out;
}

Matrix c_graph(const ChainPartition& part, const FieldSpec& field) {
    std::size_t k = part.chain_count();
    Matrix j = Matrix::identity(field, k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            if (a != b && part.chains_comparable(a, b)) j.set(a, b, field.one());
        }
    }
    return j;
}

Matrix sub_poset_moebius(const Cut& cut, CutSide side, const FieldSpec& field) {
    std::vector<std::size_t> elements = cut.side_elements(side);
    if (elements.empty()) return Matrix(field, 0, 0);
    return moebius(cut.partition().poset().induced(elements), field).matrix();
}

namespace {

// Word over chain indices induced by reversing a linear extension given in
// block-order element ids.
std::vector<std::size_t> chains_word_from_extension(const std::vector<std::size_t>& extension,
                                                    const std::vector<std::size_t>& chain_of) {
    std::vector<std::size_t> word;
    word.reserve(extension.size());
    for (auto it = extension.rbegin(); it != extension.rend(); ++it) word.push_back(chain_of[*it]);
    return word;
}

} // namespace

CutReport cut_identity_check(const Cut& cut, const FieldSpec& field, bool via_sds) {
    const ChainPartition& part = cut.partition();
    std::size_t k = part.chain_count();

    // Everything below is indexed in block order (chain by chain, ascending).
    std::vector<std::size_t> block = part.block_order();
    Poset blocked = part.poset().reordered(block);
    std::vector<std::size_t> sizes = part.chain_sizes();

    Matrix u = moebius(blocked, field).matrix();
    Matrix cu = block_compress(u, sizes);

    Matrix u_low = sub_poset_moebius(cut, CutSide::kLow, field);
    Matrix u_up = sub_poset_moebius(cut, CutSide::kUp, field);
    Matrix cu_low = block_compress(u_low, cut.side_sizes(CutSide::kLow));
    Matrix cu_up = block_compress(u_up, cut.side_sizes(CutSide::kUp));

    Matrix j = c_graph(part, field);

    CutReport report{
        /*lhs=*/cu * j,
        /*rhs=*/cu_low * j + cu_up * j - cu_low * j * (cu_up * j),
    };
    report.identity_holds = report.lhs == report.rhs;

    try {
        Matrix j_inv = mat_inv(j);
        report.j_invertible = true;
        report.lhs_j_free = cu;
        report.rhs_j_free = cu_low + cu_up - cu_low * j * cu_up;
        report.j_free_holds = *report.lhs_j_free == *report.rhs_j_free;
    } catch (const Error& e) {
        if (e.code() != errc::singular) throw;
    }

    if (via_sds) {
        report.via_sds_checked = true;

        // Constructive route: the chain graph as a dependency graph with
        // local coefficients I - J, updated along the reversal of a linear
        // extension that lists all low elements before all up elements.
        std::vector<std::size_t> chain_of(blocked.size());
        std::vector<std::size_t> offset(k + 1, 0);
        for (std::size_t c = 0; c < k; ++c) {
            offset[c + 1] = offset[c] + sizes[c];
            for (std::size_t t = offset[c]; t < offset[c + 1]; ++t) chain_of[t] = c;
        }
        // Block-order ids of each side's elements.
        std::vector<std::size_t> low_ids, up_ids;
        for (std::size_t c = 0; c < k; ++c) {
            for (std::size_t t = 0; t < sizes[c]; ++t) {
                (t < cut.positions()[c] ? low_ids : up_ids).push_back(offset[c] + t);
            }
        }
        auto extension_of = [&](const std::vector<std::size_t>& ids) {
            std::vector<std::size_t> ext;
            if (ids.empty()) return ext;
            std::vector<std::size_t> local_ext =
                linear_extensions(blocked.induced(ids), 1).at(0);
            for (std::size_t local : local_ext) ext.push_back(ids[local]);
            return ext;
        };
        std::vector<std::size_t> extension = extension_of(low_ids);
        std::vector<std::size_t> up_ext = extension_of(up_ids);
        extension.insert(extension.end(), up_ext.begin(), up_ext.end());

        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = a + 1; b < k; ++b) {
                if (part.chains_comparable(a, b)) edges.emplace_back(a, b);
            }
        }
        Matrix coeffs = Matrix::identity(field, k) - j;
        Graph chain_graph(k, edges);
        std::vector<std::size_t> word = chains_word_from_extension(extension, chain_of);

        Matrix whole =
            system_matrix_word(LinearSDS(chain_graph, coeffs, Schedule(k, word)));
        // The word starts with the up side reversed, which updates first.
        std::size_t up_len = up_ids.size();
        std::vector<std::size_t> word_up(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(up_len));
        std::vector<std::size_t> word_low(word.begin() + static_cast<std::ptrdiff_t>(up_len), word.end());
        Matrix m_up = compose_sequence(coeffs, word_up);
        Matrix m_low = compose_sequence(coeffs, word_low);

        Matrix identity = Matrix::identity(field, k);
        report.via_sds_agrees = (identity - whole == report.lhs) &&
                                (whole == m_low * m_up) &&
                                (identity - m_low * m_up == report.rhs) &&
                                (identity - m_low == cu_low * j) &&
                                (identity - m_up == cu_up * j);
    }
    return report;
}


// Instances come from a random series-parallel composition whose leaves are
// groups of interleaved chains:
//   - within a group, the union of its chains is totally ordered (a random
//     shuffle interleaves the chains), so those chains are fully comparable;
//   - a series node places everything in its left subtree below everything
//     in its right subtree, making the two chain sets fully comparable;
//   - a parallel node keeps its subtrees incomparable.
// All-or-nothing comparability and transitivity hold by construction. Cuts
// are drawn recursively: a group picks a rank threshold, a series node sends
// one whole side to low (or up) and recurses into the other.
Cut random_cut_instance(std::uint64_t seed, std::size_t n_elems, std::size_t n_chains) {
    if (n_chains == 0 || n_chains > n_elems) {
        throw Error(errc::invalid_input, "need 1 <= n_chains <= n_elems");
    }
    Rng rng(seed);

    // Chain lengths and a partition of the chains into contiguous groups.
    std::vector<std::size_t> length(n_chains, 1);
    for (std::size_t extra = n_elems - n_chains; extra > 0; --extra) {
        ++length[rng.below(n_chains)];
    }
    std::size_t n_groups = 1 + rng.below(n_chains);
    std::vector<std::size_t> group_size(n_groups, 1);
    for (std::size_t extra = n_chains - n_groups; extra > 0; --extra) {
        ++group_size[rng.below(n_groups)];
    }
    std::vector<std::size_t> group_begin(n_groups + 1, 0); // chain index ranges
    for (std::size_t g = 0; g < n_groups; ++g) group_begin[g + 1] = group_begin[g] + group_size[g];

    // Element ids in block order: chain c owns [offset[c], offset[c+1]),
    // listed ascending.
    std::vector<std::size_t> offset(n_chains + 1, 0);
    for (std::size_t c = 0; c < n_chains; ++c) offset[c + 1] = offset[c] + length[c];

    std::vector<char> rel(n_elems * n_elems, 0);
    for (std::size_t x = 0; x < n_elems; ++x) rel[x * n_elems + x] = 1;
    std::vector<std::size_t> positions(n_chains, 0);

    auto set_less = [&](std::size_t x, std::size_t y) { rel[x * n_elems + y] = 1; };

    // Depth-first over group ranges [lo, hi); fills relations and cut
    // positions for the chains they own.
    auto rec = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
        if (hi - lo == 1) {
            std::size_t g = lo;
            // Interleave the group's chains: slot t of chain c is the t-th
            // occurrence of c in a shuffled word, and rank = word position.
            std::vector<std::size_t> word;
            for (std::size_t c = group_begin[g]; c < group_begin[g + 1]; ++c) {
                word.insert(word.end(), length[c], c);
            }
            rng.shuffle(word);
            std::vector<std::size_t> element_at_rank;
            std::vector<std::size_t> seen(n_chains, 0);
            for (std::size_t c : word) {
                element_at_rank.push_back(offset[c] + seen[c]);
                ++seen[c];
            }
            for (std::size_t a = 0; a < element_at_rank.size(); ++a) {
                for (std::size_t b = a + 1; b < element_at_rank.size(); ++b) {
                    set_less(element_at_rank[a], element_at_rank[b]);
                }
            }
            // Cut below a random rank: the low side of each chain is the
            // prefix that sits under the threshold.
            std::size_t threshold = rng.below(word.size() + 1);
            for (std::size_t r = 0; r < threshold; ++r) {
                ++positions[word[r]];
            }
            return;
        }

        std::size_t mid = lo + 1 + rng.below(hi - lo - 1);
        bool series = rng.coin();
        bool left_goes_low = rng.coin();
        self(self, lo, mid);
        self(self, mid, hi);
        if (!series) return;

        // Everything in the left range sits below everything in the right.
        for (std::size_t c = group_begin[lo]; c < group_begin[mid]; ++c) {
            for (std::size_t d = group_begin[mid]; d < group_begin[hi]; ++d) {
                for (std::size_t x = offset[c]; x < offset[c + 1]; ++x) {
                    for (std::size_t y = offset[d]; y < offset[d + 1]; ++y) set_less(x, y);
                }
            }
        }
        // A valid cut cannot strand a low element above a comparable up
        // element, so one whole side leaves the recursion: either the left
        // side is entirely low or the right side is entirely up.
        if (left_goes_low) {
            for (std::size_t c = group_begin[lo]; c < group_begin[mid]; ++c) {
                positions[c] = length[c];
            }
        } else {
            for (std::size_t c = group_begin[mid]; c < group_begin[hi]; ++c) {
                positions[c] = 0;
            }
        }
    };
    rec(rec, 0, n_groups);

    Poset poset = Poset::from_relation(n_elems, std::move(rel));
    std::vector<std::vector<std::size_t>> chains;
    chains.reserve(n_chains);
    for (std::size_t c = 0; c < n_chains; ++c) {
        std::vector<std::size_t> chain;
        for (std::size_t t = offset[c]; t < offset[c + 1]; ++t) chain.push_back(t);
        chains.push_back(std::move(chain));
    }
    return Cut(ChainPartition(std::move(poset), std::move(chains)), std::move(positions));
}

} // namespace linsds
