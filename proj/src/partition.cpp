#include "wedge/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wedge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) throw DomainError("partition parts must be positive");
        if (k > 0 && parts_[k - 1] < parts_[k])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_string(std::string_view text) {
    if (text.empty() || text == "[]") return Partition();
    std::vector<int> parts;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad partition entry '" + token + "'");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size()) throw ParseError("bad partition entry '" + token + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int k) const {
    if (k < 1 || k > length()) return 0;
    return parts_[static_cast<size_t>(k - 1)];
}

int Partition::conjugate_part(int c) const {
    int n = 0;
    for (int p : parts_)
        if (p >= c) ++n;
    return n;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int k = 1; k <= inner.length(); ++k)
        if (part(k) < inner.part(k)) return false;
    return true;
}

std::string Partition::str() const {
    if (parts_.empty()) return "[]";
    std::string out;
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(parts_[k]);
    }
    return out;
}

bool Partition::lex_less(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                        b.parts_.end());
}

namespace {

void partitions_rec(int remaining, int cap, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(cap, remaining); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of_weight(int d) {
    std::vector<Partition> out;
    if (d < 0) return out;
    std::vector<int> acc;
    partitions_rec(d, d == 0 ? 1 : d, acc, out);
    return out;
}

std::vector<Partition> partitions_up_to_weight(int d) {
    std::vector<Partition> out;
    for (int w = 0; w <= d; ++w) {
        auto batch = partitions_of_weight(w);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw ContainmentError("skew shape requires inner \\subseteq outer: " + inner_.str() +
                               " not inside " + outer_.str());
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= outer_.length(); ++r)
        for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) out.push_back({r, c});
    return out;
}

int SkewShape::size() const { return outer_.weight() - inner_.weight(); }

StripStats strip_stats(const std::vector<Cell>& cells) {
    StripStats stats;
    stats.size = static_cast<int>(cells.size());
    if (cells.empty()) return stats;

    std::set<Cell> boxes(cells.begin(), cells.end());
    std::set<int> rows;
    for (const Cell& c : boxes) rows.insert(c.row);
    stats.height = static_cast<int>(rows.size()) - 1;

    // Breadth-first search over side adjacency from an arbitrary cell.
    std::vector<Cell> frontier{*boxes.begin()};
    std::set<Cell> seen{*boxes.begin()};
    while (!frontier.empty()) {
        Cell cur = frontier.back();
        frontier.pop_back();
        const Cell nbrs[4] = {{cur.row - 1, cur.col},
                              {cur.row + 1, cur.col},
                              {cur.row, cur.col - 1},
                              {cur.row, cur.col + 1}};
        for (const Cell& n : nbrs) {
            if (boxes.count(n) && !seen.count(n)) {
                seen.insert(n);
                frontier.push_back(n);
            }
        }
    }
    bool connected = seen.size() == boxes.size();

    bool has_square = false;
    for (const Cell& c : boxes) {
        if (boxes.count({c.row, c.col + 1}) && boxes.count({c.row + 1, c.col}) &&
            boxes.count({c.row + 1, c.col + 1})) {
            has_square = true;
            break;
        }
    }

    stats.is_border_strip = connected && !has_square;
    return stats;
}

StripStats strip_stats(const SkewShape& shape) { return strip_stats(shape.cells()); }

int count_above(int m, int i, const Partition& lambda) {
    // Beyond the window the tail gives lambda_k = 0 <= i - m + k - 1.
    int hi = lambda.length() + std::max(0, m - i + 1);
    int n = 0;
    for (int k = 1; k <= hi; ++k)
        if (lambda.part(k) > i - m + k - 1) ++n;
    return n;
}

bool has_beta(int m, int i, const Partition& lambda) {
    for (int k = 1; k <= lambda.length(); ++k)
        if (lambda.part(k) == i - m + k - 1) return true;
    // Tail zeros carry beta values m - k + 1 for k > length.
    int k = m - i + 1;
    return k > lambda.length() && k >= 1;
}

Partition insert_beta(int m, int i, const Partition& lambda) {
    if (has_beta(m, i, lambda))
        throw DomainError("insert_beta: value " + std::to_string(i) + " already present for (" +
                          std::to_string(m) + ", " + lambda.str() + ")");
    int c = count_above(m, i, lambda);
    std::vector<int> mu;
    for (int j = 1; j <= c; ++j) mu.push_back(lambda.part(j) - 1);
    mu.push_back(i - m + c - 1);
    int len = std::max(lambda.length() + 1, c + 1);
    for (int j = c + 2; j <= len; ++j) mu.push_back(lambda.part(j - 1));
    return Partition(std::move(mu));
}

Partition remove_beta(int m, int i, const Partition& lambda) {
    if (!has_beta(m, i, lambda))
        throw DomainError("remove_beta: value " + std::to_string(i) + " absent for (" +
                          std::to_string(m) + ", " + lambda.str() + ")");
    int c = count_above(m, i, lambda);
    std::vector<int> mu;
    for (int j = 1; j <= c; ++j) mu.push_back(lambda.part(j) + 1);
    for (int j = c + 1; j <= lambda.length(); ++j) mu.push_back(lambda.part(j + 1));
    return Partition(std::move(mu));
}

namespace {

// Candidate strip occupying rows a..b, validated in full before acceptance.
void try_remove_strip(const Partition& lambda, int k, int a, int b,
                      std::vector<StripResult>& out) {
    int nu_b = lambda.part(a) + (b - a) - k;
    if (nu_b < lambda.part(b + 1) || nu_b >= lambda.part(b)) return;
    std::vector<int> nu;
    for (int q = 1; q < a; ++q) nu.push_back(lambda.part(q));
    for (int q = a; q < b; ++q) nu.push_back(lambda.part(q + 1) - 1);
    nu.push_back(nu_b);
    for (int q = b + 1; q <= lambda.length(); ++q) nu.push_back(lambda.part(q));
    for (size_t q = 1; q < nu.size(); ++q)
        if (nu[q - 1] < nu[q]) return;
    for (int v : nu)
        if (v < 0) return;
    Partition shape(std::move(nu));
    if (!lambda.contains(shape)) return;
    StripStats stats = strip_stats(SkewShape(lambda, shape));
    if (stats.is_border_strip && stats.size == k && stats.height == b - a)
        out.push_back({std::move(shape), stats.height});
}

void try_add_strip(const Partition& lambda, int k, int a, int b, std::vector<StripResult>& out) {
    int nu_a = lambda.part(b) + k - (b - a);
    if (nu_a <= lambda.part(a)) return;
    if (a > 1 && lambda.part(a - 1) < nu_a) return;
    std::vector<int> nu;
    int len = std::max(lambda.length(), b);
    for (int q = 1; q < a; ++q) nu.push_back(lambda.part(q));
    nu.push_back(nu_a);
    for (int q = a + 1; q <= b; ++q) nu.push_back(lambda.part(q - 1) + 1);
    for (int q = b + 1; q <= len; ++q) nu.push_back(lambda.part(q));
    for (size_t q = 1; q < nu.size(); ++q)
        if (nu[q - 1] < nu[q]) return;
    Partition shape(std::move(nu));
    if (!shape.contains(lambda)) return;
    StripStats stats = strip_stats(SkewShape(shape, lambda));
    if (stats.is_border_strip && stats.size == k && stats.height == b - a)
        out.push_back({std::move(shape), stats.height});
}

} // namespace

std::vector<StripResult> enumerate_border_strips(const Partition& lambda, int k,
                                                 StripDirection dir) {
    if (k < 1) throw DomainError("border strip length must be positive");
    std::vector<StripResult> out;
    if (dir == StripDirection::Remove) {
        for (int a = 1; a <= lambda.length(); ++a)
            for (int b = a; b <= std::min(lambda.length(), a + k - 1); ++b)
                try_remove_strip(lambda, k, a, b, out);
    } else {
        for (int a = 1; a <= lambda.length() + 1; ++a)
            for (int b = a; b <= a + k - 1; ++b) try_add_strip(lambda, k, a, b, out);
    }
    std::sort(out.begin(), out.end(), [](const StripResult& x, const StripResult& y) {
        return Partition::lex_less(y.shape, x.shape);
    });
    return out;
}

} // namespace wedge
