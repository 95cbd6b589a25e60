#include "lascoux/compositions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lascoux {

int size_of(const WeakComposition& gamma)
{
    return std::accumulate(gamma.begin(), gamma.end(), 0);
}

int max_part(const WeakComposition& gamma)
{
    return gamma.empty() ? 0 : *std::max_element(gamma.begin(), gamma.end());
}

bool is_weak_composition(const WeakComposition& gamma)
{
    return std::all_of(gamma.begin(), gamma.end(), [](int p) { return p >= 0; });
}

bool is_partition(const WeakComposition& gamma)
{
    if (!is_weak_composition(gamma))
        return false;
    return std::is_sorted(gamma.begin(), gamma.end(), std::greater<int>());
}

bool is_composition(const WeakComposition& alpha)
{
    return std::all_of(alpha.begin(), alpha.end(), [](int p) { return p > 0; });
}

Partition lambda_of(const WeakComposition& gamma)
{
    Partition result = gamma;
    std::sort(result.begin(), result.end(), std::greater<int>());
    return result;
}

WeakComposition gamma_plus(const WeakComposition& gamma)
{
    WeakComposition result;
    for (int p : gamma)
        if (p != 0)
            result.push_back(p);
    return result;
}

int lex_compare(const WeakComposition& a, const WeakComposition& b)
{
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        if (x != y)
            return x < y ? -1 : 1;
    }
    return 0;
}

bool contains(const WeakComposition& outer, const WeakComposition& inner)
{
    size_t n = std::max(outer.size(), inner.size());
    for (size_t i = 0; i < n; ++i) {
        int out = i < outer.size() ? outer[i] : 0;
        int in = i < inner.size() ? inner[i] : 0;
        if (in > out)
            return false;
    }
    return true;
}

WeakComposition reversed(const WeakComposition& gamma)
{
    return WeakComposition(gamma.rbegin(), gamma.rend());
}

WeakComposition padded(const WeakComposition& gamma, int parts)
{
    if (static_cast<int>(gamma.size()) > parts)
        throw std::invalid_argument("padded: composition longer than requested part count");
    WeakComposition result = gamma;
    result.resize(parts, 0);
    return result;
}

Partition strip_trailing_zeros(const WeakComposition& gamma)
{
    Partition result = gamma;
    while (!result.empty() && result.back() == 0)
        result.pop_back();
    return result;
}

std::vector<WeakComposition> weak_compositions_of(int size, int parts, int max_part)
{
    std::vector<WeakComposition> result;
    WeakComposition current(parts, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts) {
            if (remaining == 0)
                result.push_back(current);
            return;
        }
        int hi = max_part < 0 ? remaining : std::min(remaining, max_part);
        for (int p = 0; p <= hi; ++p) {
            current[pos] = p;
            self(self, pos + 1, remaining - p);
        }
        current[pos] = 0;
    };
    rec(rec, 0, size);
    return result;
}

std::vector<Partition> partitions_of(int size, int max_parts, int max_part)
{
    std::vector<Partition> result;
    Partition current;
    int cap = max_part < 0 ? size : max_part;
    auto rec = [&](auto&& self, int remaining, int bound) -> void {
        if (remaining == 0) {
            result.push_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_parts)
            return;
        for (int p = std::min(remaining, bound); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, size, cap);
    return result;
}

std::vector<WeakComposition> compositions_of(int size)
{
    std::vector<WeakComposition> result;
    WeakComposition current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            result.push_back(current);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            current.push_back(p);
            self(self, remaining - p);
            current.pop_back();
        }
    };
    rec(rec, size);
    return result;
}

std::vector<WeakComposition> rearrangements_of(const Partition& lambda, int parts)
{
    WeakComposition sorted = padded(strip_trailing_zeros(lambda), parts);
    std::sort(sorted.begin(), sorted.end());
    std::vector<WeakComposition> result;
    do {
        result.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return result;
}

WeakComposition parse_composition(const std::string& text)
{
    WeakComposition gamma;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t used = 0;
            int part = std::stoi(item, &used);
            if (used != item.size() || part < 0)
                throw std::invalid_argument("parse_composition: bad part '" + item + "'");
            gamma.push_back(part);
        }
        if (text.empty() || text.back() == ',')
            throw std::invalid_argument("parse_composition: trailing comma");
    } else {
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("parse_composition: bad digit in '" + text + "'");
            gamma.push_back(ch - '0');
        }
    }
    return gamma;
}

std::string format_composition(const WeakComposition& gamma)
{
    bool compact = std::all_of(gamma.begin(), gamma.end(), [](int p) { return p <= 9; });
    std::string out;
    for (size_t i = 0; i < gamma.size(); ++i) {
        if (!compact && i > 0)
            out += ',';
        out += std::to_string(gamma[i]);
    }
    return out;
}

}  // namespace lascoux
