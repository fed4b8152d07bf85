#include "wedge/maya.hpp"

#include <algorithm>
#include <sstream>

namespace wedge {

int MayaDiagram::member(int j) const { return shape_.part(j) + charge_ - j + 1; }

bool MayaDiagram::contains(int n) const {
    int tail_top = charge_ - shape_.length(); // largest tail member
    if (n <= tail_top) return true;
    for (int j = 1; j <= shape_.length(); ++j) {
        int s = member(j);
        if (s == n) return true;
        if (s < n) return false;
    }
    return false;
}

int MayaDiagram::count_above(int j) const {
    int tail_top = charge_ - shape_.length();
    int n = std::max(0, tail_top - j);
    for (int k = 1; k <= shape_.length(); ++k)
        if (member(k) > j) ++n;
    return n;
}

std::vector<int> MayaDiagram::positive_members() const {
    std::vector<int> out;
    for (int j = 1;; ++j) {
        int s = member(j);
        if (s <= 0) break;
        out.push_back(s);
    }
    return out;
}

std::vector<int> MayaDiagram::negative_gaps() const {
    std::vector<int> out;
    int tail_top = charge_ - shape_.length();
    for (int n = 0; n > tail_top; --n)
        if (!contains(n)) out.push_back(n);
    return out;
}

MayaDiagram MayaDiagram::from_exceptional_sets(std::vector<int> positive, std::vector<int> gaps) {
    std::sort(positive.rbegin(), positive.rend());
    std::sort(gaps.rbegin(), gaps.rend());
    int charge = static_cast<int>(positive.size()) - static_cast<int>(gaps.size());

    // Explicit members from the top down to one past the lowest gap; below
    // that every integer is a member and the partition entries vanish.
    std::vector<int> members = positive;
    int floor = (gaps.empty() ? 0 : gaps.back()) - 2;
    size_t gi = 0;
    for (int n = 0; n >= floor; --n) {
        while (gi < gaps.size() && gaps[gi] > n) ++gi;
        if (gi < gaps.size() && gaps[gi] == n) continue;
        members.push_back(n);
    }

    std::vector<int> parts;
    for (size_t j = 0; j < members.size(); ++j)
        parts.push_back(members[j] - charge + static_cast<int>(j));
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return MayaDiagram(charge, Partition(std::move(parts)));
}

MayaDiagram MayaDiagram::with_inserted(int n) const {
    if (contains(n)) throw DomainError("maya insert: " + std::to_string(n) + " already present");
    auto positive = positive_members();
    auto gaps = negative_gaps();
    if (n > 0) {
        positive.push_back(n);
    } else {
        gaps.erase(std::find(gaps.begin(), gaps.end(), n));
    }
    return from_exceptional_sets(std::move(positive), std::move(gaps));
}

MayaDiagram MayaDiagram::with_removed(int n) const {
    if (!contains(n)) throw DomainError("maya remove: " + std::to_string(n) + " not present");
    auto positive = positive_members();
    auto gaps = negative_gaps();
    if (n > 0) {
        positive.erase(std::find(positive.begin(), positive.end(), n));
    } else {
        gaps.push_back(n);
    }
    return from_exceptional_sets(std::move(positive), std::move(gaps));
}

std::string MayaDiagram::code_window(int lo, int hi) const {
    if (lo > hi) throw DomainError("code window requires lo <= hi");
    std::string letters;
    letters.reserve(static_cast<size_t>(hi - lo + 1));
    for (int n = lo; n <= hi; ++n) letters += contains(n) ? 'U' : 'R';
    return letters;
}

std::pair<int, int> MayaDiagram::default_code_window() const {
    auto gaps = negative_gaps();
    auto positive = positive_members();
    int lo = (gaps.empty() ? 0 : gaps.back()) - 1;
    int hi = (positive.empty() ? 0 : positive.front()) + 1;
    return {lo, hi};
}

std::string MayaDiagram::prefix_string() const {
    std::string out;
    for (int j = 1; j <= tail_start(); ++j) {
        if (j > 1) out += ',';
        out += std::to_string(member(j));
    }
    out += ",...";
    return out;
}

MayaDiagram MayaDiagram::parse_prefix(const std::string& text) {
    std::vector<int> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token == "..." || token == "…") break;
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad maya prefix entry '" + token + "'");
        }
        if (pos != token.size()) throw ParseError("bad maya prefix entry '" + token + "'");
        values.push_back(v);
    }
    if (values.empty()) throw ParseError("empty maya prefix");
    for (size_t j = 1; j < values.size(); ++j)
        if (values[j - 1] <= values[j]) throw ParseError("maya prefix must be strictly decreasing");

    int k = static_cast<int>(values.size());
    int charge = values.back() + k - 1;
    std::vector<int> parts;
    for (int j = 1; j <= k; ++j) parts.push_back(values[static_cast<size_t>(j - 1)] - charge + j - 1);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return MayaDiagram(charge, Partition(std::move(parts)));
}

FrobeniusCoordinates frobenius_coordinates(const Partition& lambda) {
    FrobeniusCoordinates out;
    for (int i = 1; i <= lambda.length(); ++i) {
        if (lambda.part(i) < i) break;
        out.arms_doubled.push_back(2 * (lambda.part(i) - i) + 1);
        out.legs_doubled.push_back(2 * (lambda.conjugate_part(i) - i) + 1);
    }
    return out;
}

} // namespace wedge
