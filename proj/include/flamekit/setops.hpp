#pragma once

#include <algorithm>
#include <vector>

namespace flamekit {

// Small helpers for the sorted-unique vectors used as vertex and edge sets.

template <typename T>
void canonicalize(std::vector<T>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

template <typename T>
bool contains(const std::vector<T>& xs, const T& x) {
    return std::binary_search(xs.begin(), xs.end(), x);
}

template <typename T>
bool subset_of(const std::vector<T>& a, const std::vector<T>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <typename T>
std::vector<T> set_union(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <typename T>
std::vector<T> set_minus(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <typename T>
std::vector<T> set_intersect(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

template <typename T>
std::vector<T> with_element(std::vector<T> xs, const T& x) {
    xs.push_back(x);
    canonicalize(xs);
    return xs;
}

template <typename T>
std::vector<T> without_element(const std::vector<T>& xs, const T& x) {
    std::vector<T> out;
    out.reserve(xs.size());
    for (const T& e : xs)
        if (!(e == x)) out.push_back(e);
    return out;
}

}  // namespace flamekit
