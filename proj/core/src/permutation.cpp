#include "stacksort/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace stacksort {

int oracle_cap() {
    if (const char* env = std::getenv(kOracleCapEnvVar)) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return kDefaultOracleCap;
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    if (n < 1) throw std::invalid_argument("permutation must have length >= 1");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : entries_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("entries are not a bijection on [n]");
        seen[static_cast<size_t>(v - 1)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty permutation string");
    std::vector<int> entries;
    if (text.find('.') != std::string_view::npos) {
        size_t start = 0;
        while (start <= text.size()) {
            size_t dot = text.find('.', start);
            std::string_view tok = text.substr(start, dot == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : dot - start);
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw std::invalid_argument("bad token in dotted permutation string");
            entries.push_back(v);
            if (dot == std::string_view::npos) break;
            start = dot + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("digit-string permutations use digits 1-9 only");
            entries.push_back(c - '0');
        }
    }
    return Permutation(std::move(entries));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (at(i) != i) return false;
    return true;
}

std::string Permutation::str() const {
    std::ostringstream out;
    if (size() <= 9) {
        for (int v : entries_) out << v;
    } else {
        for (size_t i = 0; i < entries_.size(); ++i) {
            if (i) out << '.';
            out << entries_[i];
        }
    }
    return out.str();
}

namespace detail {

void stack_sort_raw(std::span<const int> in, std::span<int> out, std::span<int> stack_buf) {
    size_t top = 0, o = 0;
    for (int x : in) {
        while (top > 0 && stack_buf[top - 1] < x) out[o++] = stack_buf[--top];
        stack_buf[top++] = x;
    }
    while (top > 0) out[o++] = stack_buf[--top];
}

bool is_t_sortable_raw(std::span<const int> in, int t,
                       std::span<int> buf_a, std::span<int> buf_b, std::span<int> stack_buf) {
    const size_t n = in.size();
    auto is_id = [n](std::span<const int> v) {
        for (size_t i = 0; i < n; ++i)
            if (v[i] != static_cast<int>(i) + 1) return false;
        return true;
    };
    if (is_id(in)) return true;
    std::span<const int> cur = in;
    for (int pass = 0; pass < t; ++pass) {
        std::span<int> dst = ((pass % 2 == 0) ? buf_a : buf_b).first(n);
        stack_sort_raw(cur, dst, stack_buf);
        if (is_id(dst)) return true;
        cur = dst;
    }
    return false;
}

int descent_count_raw(std::span<const int> entries) {
    int k = 0;
    for (size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i] > entries[i + 1]) ++k;
    return k;
}

void for_each_permutation(int n, const std::function<void(std::span<const int>)>& fn) {
    std::vector<int> cur(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cur[static_cast<size_t>(i)] = i + 1;
    do {
        fn(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
}

void for_each_permutation_with_first(int n, int first_entry,
                                     const std::function<void(std::span<const int>)>& fn) {
    std::vector<int> cur;
    cur.reserve(static_cast<size_t>(n));
    cur.push_back(first_entry);
    for (int v = 1; v <= n; ++v)
        if (v != first_entry) cur.push_back(v);
    do {
        fn(cur);
    } while (std::next_permutation(cur.begin() + 1, cur.end()));
}

} // namespace detail

Permutation stack_sort(const Permutation& p) {
    const int n = p.size();
    std::vector<int> out(static_cast<size_t>(n)), stack(static_cast<size_t>(n));
    detail::stack_sort_raw(p.entries(), out, stack);
    return Permutation(std::move(out));
}

Permutation stack_sort_iterated(const Permutation& p, int t) {
    if (t < 0) throw std::invalid_argument("iteration count must be nonnegative");
    Permutation cur = p;
    for (int i = 0; i < t; ++i) cur = stack_sort(cur);
    return cur;
}

bool is_t_stack_sortable(const Permutation& p, int t) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    const size_t n = static_cast<size_t>(p.size());
    std::vector<int> a(n), b(n), s(n);
    return detail::is_t_sortable_raw(p.entries(), t, a, b, s);
}

DescentData descents(const Permutation& p) {
    DescentData data;
    data.n = p.size();
    int run_start = 1;
    for (int i = 1; i < p.size(); ++i) {
        if (p.at(i) > p.at(i + 1)) {
            data.descents.push_back(i);
            data.runs.emplace_back(run_start, i);
            run_start = i + 1;
        }
    }
    data.runs.emplace_back(run_start, p.size());
    return data;
}

std::vector<int> valleys(const Permutation& p) {
    std::vector<int> out;
    for (int i = 2; i <= p.size() - 1; ++i)
        if (p.at(i) < p.at(i - 1) && p.at(i) < p.at(i + 1)) out.push_back(i);
    return out;
}

std::vector<std::pair<int, int>> ascending_runs(const Permutation& p) {
    return descents(p).runs;
}

std::vector<Permutation> brute_force_preimages(const Permutation& p, int cap) {
    const int n = p.size();
    if (n > cap)
        throw resource_limit_error("preimage oracle refuses n = " + std::to_string(n) +
                                   " (cap " + std::to_string(cap) + ")");
    std::vector<Permutation> result;
    std::vector<int> out(static_cast<size_t>(n)), stack(static_cast<size_t>(n));
    detail::for_each_permutation(n, [&](std::span<const int> sigma) {
        detail::stack_sort_raw(sigma, out, stack);
        if (std::equal(out.begin(), out.end(), p.entries().begin()))
            result.emplace_back(std::vector<int>(sigma.begin(), sigma.end()));
    });
    return result; // lexicographic because the sweep is
}

PermutationStream::PermutationStream(int n) : fixed_prefix_(0) {
    if (n < 1) throw std::invalid_argument("stream needs n >= 1");
    current_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) current_[static_cast<size_t>(i)] = i + 1;
}

PermutationStream::PermutationStream(int n, int first_entry) : fixed_prefix_(1) {
    if (n < 1) throw std::invalid_argument("stream needs n >= 1");
    if (first_entry < 1 || first_entry > n)
        throw std::invalid_argument("first entry out of range");
    current_.reserve(static_cast<size_t>(n));
    current_.push_back(first_entry);
    for (int v = 1; v <= n; ++v)
        if (v != first_entry) current_.push_back(v);
}

std::optional<Permutation> PermutationStream::next() {
    if (exhausted_) return std::nullopt;
    if (!fresh_) {
        if (!std::next_permutation(current_.begin() + fixed_prefix_, current_.end())) {
            exhausted_ = true;
            return std::nullopt;
        }
    }
    fresh_ = false;
    return Permutation(current_);
}

} // namespace stacksort
