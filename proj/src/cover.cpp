#include "ocn/cover.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "ocn/parallel.hpp"

namespace ocn {

std::vector<double> IntegerHistogram::expand() const {
  std::vector<double> out;
  out.reserve(total_);
  for (auto [value, count] : bins_) out.insert(out.end(), count, static_cast<double>(value));
  return out;
}

void IntegerHistogram::write_csv(std::ostream& out) const {
  out << "value,count\n";
  for (auto [value, count] : bins_) out << value << ',' << count << '\n';
}

CommunityCover CommunityCover::from_communities(std::size_t node_count,
                                                std::vector<std::vector<NodeId>> communities,
                                                std::size_t* duplicates_dropped) {
  CommunityCover cover;
  std::size_t dropped = 0;
  for (std::size_t c = 0; c < communities.size(); ++c) {
    auto& members = communities[c];
    if (members.empty()) throw std::invalid_argument("community " + std::to_string(c) + " is empty");
    std::sort(members.begin(), members.end());
    const auto last = std::unique(members.begin(), members.end());
    dropped += static_cast<std::size_t>(members.end() - last);
    members.erase(last, members.end());
    if (members.back() >= node_count)
      throw std::out_of_range("community " + std::to_string(c) + " references node " +
                              std::to_string(members.back()) + " outside the graph");
  }
  cover.communities_ = std::move(communities);
  cover.memberships_.assign(node_count, {});
  // visiting communities in id order leaves every membership list sorted
  for (std::size_t c = 0; c < cover.communities_.size(); ++c)
    for (NodeId v : cover.communities_[c]) cover.memberships_[v].push_back(static_cast<CommunityId>(c));
  if (duplicates_dropped) *duplicates_dropped = dropped;
  return cover;
}

std::size_t CommunityCover::max_membership_number() const {
  std::size_t best = 0;
  for (const auto& m : memberships_) best = std::max(best, m.size());
  return best;
}

LoadedCover parse_cover(std::istream& in, const Graph& g, CoverParseOptions options) {
  std::vector<std::vector<NodeId>> communities;
  CoverLoadSummary summary;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<NodeId> members;
    const char* p = line.data();
    const char* end = p + line.size();
    bool comment = false;
    while (p < end) {
      while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
      if (p == end) break;
      if (members.empty() && *p == '#') {
        comment = true;
        break;
      }
      const char* tok_end = p;
      while (tok_end < end && !std::isspace(static_cast<unsigned char>(*tok_end))) ++tok_end;
      Label label{};
      auto [ptr, ec] = std::from_chars(p, tok_end, label);
      if (ec != std::errc{} || ptr != tok_end)
        throw CoverError("line " + std::to_string(line_no) + ": not an integer node id '" +
                             std::string(p, tok_end) + "'",
                         line_no);
      if (auto id = g.find_label(label)) {
        members.push_back(*id);
      } else if (options.ignore_unknown_ids) {
        ++summary.unknown_ids_dropped;
      } else {
        throw CoverError("line " + std::to_string(line_no) + ": unknown node id " +
                             std::to_string(label),
                         line_no);
      }
      p = tok_end;
    }
    if (comment) continue;
    if (members.empty()) {
      ++summary.empty_lines_skipped;
      continue;
    }
    communities.push_back(std::move(members));
  }
  LoadedCover out;
  out.cover = CommunityCover::from_communities(g.node_count(), std::move(communities),
                                               &summary.duplicates_dropped);
  summary.communities = out.cover.community_count();
  out.summary = summary;
  return out;
}

LoadedCover load_cover(const std::filesystem::path& path, const Graph& g, CoverParseOptions options) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open community file " + path.string());
  return parse_cover(in, g, options);
}

MembershipHistogram membership_histogram(const CommunityCover& cover) {
  MembershipHistogram out;
  for (NodeId v = 0; v < cover.node_count(); ++v) {
    const auto m = cover.membership_number(v);
    if (m == 0)
      ++out.unassigned_nodes;
    else
      out.histogram.add(m);
  }
  return out;
}

IntegerHistogram community_size_histogram(const CommunityCover& cover) {
  IntegerHistogram out;
  for (const auto& members : cover.communities()) out.add(members.size());
  return out;
}

std::uint64_t membership_pair_count(const CommunityCover& cover) {
  std::uint64_t total = 0;
  for (NodeId v = 0; v < cover.node_count(); ++v) {
    const std::uint64_t m = cover.membership_number(v);
    total += m * (m - (m > 0 ? 1 : 0)) / 2;
  }
  return total;
}

std::vector<OverlapPair> overlap_pairs(const CommunityCover& cover, unsigned threads) {
  using Accumulator = std::unordered_map<std::uint64_t, std::uint32_t>;
  const unsigned workers = resolve_threads(threads, cover.node_count());
  std::vector<Accumulator> partial(workers);
  parallel_shards(cover.node_count(), workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& acc = partial[w];
    for (std::size_t v = begin; v < end; ++v) {
      const auto& ms = cover.memberships(static_cast<NodeId>(v));
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
          ++acc[(std::uint64_t{ms[i]} << 32) | ms[j]];
    }
  });
  Accumulator& merged = partial[0];
  for (unsigned w = 1; w < workers; ++w) {
    for (auto [key, count] : partial[w]) merged[key] += count;
    Accumulator{}.swap(partial[w]);
  }
  std::vector<OverlapPair> out;
  out.reserve(merged.size());
  for (auto [key, count] : merged)
    out.push_back({static_cast<CommunityId>(key >> 32), static_cast<CommunityId>(key & 0xffffffffu),
                   count});
  std::sort(out.begin(), out.end(), [](const OverlapPair& a, const OverlapPair& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  });
  return out;
}

IntegerHistogram overlap_size_histogram(const CommunityCover& cover, unsigned threads) {
  IntegerHistogram out;
  for (const auto& p : overlap_pairs(cover, threads)) out.add(p.shared);
  return out;
}

}  // namespace ocn
