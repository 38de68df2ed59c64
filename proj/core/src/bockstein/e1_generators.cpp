#include "irr/bockstein/e1_generators.hpp"

#include <algorithm>

namespace irr::bockstein {

namespace {

using dyerlashof::AdmissibleWord;
using dyerlashof::WordEntry;

// Words are grown by prepending the next operation; each entry raises the
// degree by 2i(p-1) - e >= 2p - 3 > 0, so the search is finite.
void extend(std::uint64_t p, std::int64_t max_degree, AdmissibleWord& word,
            std::vector<AdmissibleWord>& out) {
  const auto step = static_cast<std::int64_t>(2 * (p - 1));
  const std::int64_t degree = word.degree(p);
  for (std::int64_t i = 1; degree + step * i - 1 <= max_degree; ++i) {
    for (int eps : {0, 1}) {
      if (degree + step * i - eps > max_degree) continue;
      word.entries.insert(word.entries.begin(), WordEntry{eps, i});
      // Admissibility is not monotone under prepending (the excess depends on
      // the first entry), so recurse through every word and filter.
      if (dyerlashof::is_admissible(word, p) && word.degree(p) % 2 == 0) out.push_back(word);
      extend(p, max_degree, word, out);
      word.entries.erase(word.entries.begin());
    }
  }
}

}  // namespace

std::vector<AdmissibleWord> enumerate_e1_generators(std::uint64_t p, std::span<const std::int64_t> base_degrees,
                                                    std::int64_t max_degree) {
  std::vector<AdmissibleWord> out;
  for (std::int64_t base : base_degrees) {
    AdmissibleWord word{{}, base};
    std::vector<AdmissibleWord> found;
    if (dyerlashof::is_admissible(word, p) && base % 2 == 0 && base <= max_degree) found.push_back(word);
    extend(p, max_degree, word, found);
    std::stable_sort(found.begin(), found.end(), [&](const AdmissibleWord& a, const AdmissibleWord& b) {
      if (a.degree(p) != b.degree(p)) return a.degree(p) < b.degree(p);
      if (a.entries.size() != b.entries.size()) return a.entries.size() < b.entries.size();
      return std::lexicographical_compare(
          a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
          [](const WordEntry& x, const WordEntry& y) { return x.i != y.i ? x.i < y.i : x.epsilon < y.epsilon; });
    });
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

}  // namespace irr::bockstein
