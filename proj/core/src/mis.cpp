#include "spectra/mis.hpp"

#include <algorithm>
#include <bit>

namespace spectra {

Spectrum::Spectrum(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    std::sort(sizes_.begin(), sizes_.end());
    sizes_.erase(std::unique(sizes_.begin(), sizes_.end()), sizes_.end());
}

Spectrum Spectrum::interval(int lo, int hi) {
    if (lo > hi) {
        throw std::invalid_argument("Spectrum::interval: lo > hi");
    }
    std::vector<int> sizes;
    sizes.reserve(static_cast<std::size_t>(hi - lo) + 1);
    for (int s = lo; s <= hi; ++s) {
        sizes.push_back(s);
    }
    return Spectrum(std::move(sizes));
}

int Spectrum::min() const {
    if (sizes_.empty()) {
        throw std::logic_error("Spectrum::min: empty spectrum");
    }
    return sizes_.front();
}

int Spectrum::max() const {
    if (sizes_.empty()) {
        throw std::logic_error("Spectrum::max: empty spectrum");
    }
    return sizes_.back();
}

bool Spectrum::contains(int size) const {
    return std::binary_search(sizes_.begin(), sizes_.end(), size);
}

bool Spectrum::is_interval() const {
    if (sizes_.empty()) {
        return false;
    }
    return sizes_.back() - sizes_.front() + 1 == static_cast<int>(sizes_.size());
}

std::string Spectrum::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(sizes_[i]);
    }
    out += "}";
    return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g, std::uint64_t cap) {
    std::vector<VertexSet> out;
    for_each_mis(g, [&](const VertexSet& s) { out.push_back(s); }, cap);
    return out;
}

namespace {

// Single-word specialization of the enumeration for graphs on at most 64
// vertices; tracks cardinalities only. Same branching order as the general
// template, so counts agree exactly.
class MaskHistogram {
public:
    MaskHistogram(const Graph& g, std::uint64_t cap) : cap_(cap) {
        int n = g.vertex_count();
        adj_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::uint64_t m = 0;
            for (int u : g.adjacency(v)) {
                m |= std::uint64_t{1} << u;
            }
            adj_[static_cast<std::size_t>(v)] = m;
        }
        full_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

    std::map<int, std::uint64_t> run() {
        recurse(full_, 0, 0);
        return std::move(histogram_);
    }

private:
    void recurse(std::uint64_t candidates, std::uint64_t excluded, int size) {
        if (candidates == 0) {
            if (excluded == 0) {
                if (++emitted_ > cap_) {
                    throw MisCapExceeded(cap_);
                }
                ++histogram_[size];
            }
            return;
        }
        for (std::uint64_t t = excluded; t != 0; t &= t - 1) {
            if ((adj_[static_cast<std::size_t>(std::countr_zero(t))] & candidates) == 0) {
                return;
            }
        }
        int v = std::countr_zero(candidates);
        std::uint64_t bit = std::uint64_t{1} << v;
        std::uint64_t nv = adj_[static_cast<std::size_t>(v)];
        recurse(candidates & ~nv & ~bit, excluded & ~nv, size + 1);
        recurse(candidates & ~bit, excluded | bit, size);
    }

    std::vector<std::uint64_t> adj_;
    std::uint64_t full_ = 0;
    std::uint64_t cap_;
    std::uint64_t emitted_ = 0;
    std::map<int, std::uint64_t> histogram_;
};

}  // namespace

std::map<int, std::uint64_t> mis_size_histogram(const Graph& g, std::uint64_t cap) {
    if (g.vertex_count() <= 64) {
        return MaskHistogram(g, cap).run();
    }
    std::map<int, std::uint64_t> histogram;
    for_each_mis(g, [&](const VertexSet& s) { ++histogram[s.count()]; }, cap);
    return histogram;
}

std::uint64_t mis_count(const Graph& g, std::uint64_t cap) {
    std::uint64_t total = 0;
    for (auto [size, n] : mis_size_histogram(g, cap)) {
        total += n;
    }
    return total;
}

Spectrum spectrum(const Graph& g, std::uint64_t cap) {
    std::vector<int> sizes;
    for (auto [size, n] : mis_size_histogram(g, cap)) {
        sizes.push_back(size);
    }
    return Spectrum(std::move(sizes));
}

ClassReport classify(const Graph& g, std::uint64_t cap) {
    ClassReport report;
    std::uint64_t total = 0;
    std::vector<int> sizes;
    for (auto [size, n] : mis_size_histogram(g, cap)) {
        sizes.push_back(size);
        total += n;
    }
    report.spectrum = Spectrum(std::move(sizes));
    report.class_size = report.spectrum.count();
    report.girth = girth(g);
    report.min_degree = min_degree(g);
    report.leafless = g.vertex_count() == 0 || report.min_degree >= 2;
    report.mis_count = total;
    return report;
}

}  // namespace spectra
