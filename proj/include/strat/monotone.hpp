#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace strat {

/// Error type for all precondition and validation failures in the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A monotone map [n] -> [m] between finite ordinals, stored as its image list.
/// These are the morphisms of the simplex category; every face/degeneracy
/// operator is one of these and composition/factorization happens here.
class MonotoneMap {
public:
    MonotoneMap(std::vector<int> images, int target_dim)
        : images_(std::move(images)), target_dim_(target_dim) {
        if (images_.empty()) throw Error("MonotoneMap: empty image list ([-1] is not an object)");
        int prev = 0;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (images_[i] < 0 || images_[i] > target_dim_)
                throw Error("MonotoneMap: image out of range");
            if (i > 0 && images_[i] < prev) throw Error("MonotoneMap: not monotone");
            prev = images_[i];
        }
    }

    static MonotoneMap identity(int n) {
        std::vector<int> im(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) im[static_cast<std::size_t>(i)] = i;
        return MonotoneMap(std::move(im), n);
    }

    /// Coface delta_i : [n-1] -> [n], the injection missing i.
    static MonotoneMap coface(int n, int i) {
        if (n < 1 || i < 0 || i > n) throw Error("coface: index out of range");
        std::vector<int> im;
        im.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j <= n; ++j)
            if (j != i) im.push_back(j);
        return MonotoneMap(std::move(im), n);
    }

    /// Codegeneracy sigma_i : [n+1] -> [n], hitting i twice.
    static MonotoneMap codegeneracy(int n, int i) {
        if (i < 0 || i > n) throw Error("codegeneracy: index out of range");
        std::vector<int> im;
        im.reserve(static_cast<std::size_t>(n) + 2);
        for (int j = 0; j <= n + 1; ++j) im.push_back(j <= i ? std::min(j, i) : j - 1);
        return MonotoneMap(std::move(im), n);
    }

    /// Constant map [n] -> [m] with value v.
    static MonotoneMap constant(int n, int m, int v) {
        return MonotoneMap(std::vector<int>(static_cast<std::size_t>(n) + 1, v), m);
    }

    int source_dim() const { return static_cast<int>(images_.size()) - 1; }
    int target_dim() const { return target_dim_; }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        if (source_dim() != target_dim_) return false;
        for (int i = 0; i <= source_dim(); ++i)
            if (images_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    bool is_injective() const {
        for (std::size_t i = 1; i < images_.size(); ++i)
            if (images_[i] == images_[i - 1]) return false;
        return true;
    }

    bool is_surjective() const {
        int want = 0;
        for (int v : images_) {
            if (v == want) ++want;
            else if (v > want) return false;
        }
        return want == target_dim_ + 1;
    }

    /// Epi-mono factorization in the simplex category: *this = mono o epi.
    struct Factorization;
    Factorization factor() const;

    /// Elements of [m] missed by the image, ascending.
    std::vector<int> complement_of_image() const {
        std::vector<bool> hit(static_cast<std::size_t>(target_dim_) + 1, false);
        for (int v : images_) hit[static_cast<std::size_t>(v)] = true;
        std::vector<int> out;
        for (int j = 0; j <= target_dim_; ++j)
            if (!hit[static_cast<std::size_t>(j)]) out.push_back(j);
        return out;
    }

    bool operator==(const MonotoneMap& o) const {
        return target_dim_ == o.target_dim_ && images_ == o.images_;
    }
    bool operator!=(const MonotoneMap& o) const { return !(*this == o); }
    bool operator<(const MonotoneMap& o) const {
        if (target_dim_ != o.target_dim_) return target_dim_ < o.target_dim_;
        return images_ < o.images_;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(images_[i]);
        }
        s += "]->" + std::to_string(target_dim_);
        return s;
    }

private:
    std::vector<int> images_;
    int target_dim_;
};

struct MonotoneMap::Factorization {
    MonotoneMap epi;   // [n] ->> [r]
    MonotoneMap mono;  // [r] >-> [m]
};

inline MonotoneMap::Factorization MonotoneMap::factor() const {
    std::vector<int> image_values;
    for (int v : images_)
        if (image_values.empty() || image_values.back() != v) image_values.push_back(v);
    int r = static_cast<int>(image_values.size()) - 1;
    std::vector<int> epi_im;
    epi_im.reserve(images_.size());
    int pos = 0;
    for (int v : images_) {
        while (image_values[static_cast<std::size_t>(pos)] != v) ++pos;
        epi_im.push_back(pos);
    }
    return {MonotoneMap(std::move(epi_im), r), MonotoneMap(std::move(image_values), target_dim_)};
}

/// Composite g o f : [n] -> [k] of f : [n] -> [m] and g : [m] -> [k].
inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
    if (f.target_dim() != g.source_dim()) throw Error("compose: dimension mismatch");
    std::vector<int> im;
    im.reserve(static_cast<std::size_t>(f.source_dim()) + 1);
    for (int i = 0; i <= f.source_dim(); ++i) im.push_back(g(f(i)));
    return MonotoneMap(std::move(im), g.target_dim());
}

/// All monotone maps [n] -> [m], lexicographically ordered by image list.
std::vector<MonotoneMap> all_monotone_maps(int n, int m);
/// All surjective monotone maps [n] ->> [m].
std::vector<MonotoneMap> all_surjections(int n, int m);
/// All injective monotone maps [n] >-> [m].
std::vector<MonotoneMap> all_injections(int n, int m);

struct MonotoneMapHash {
    std::size_t operator()(const MonotoneMap& f) const {
        std::size_t h = std::hash<int>()(f.target_dim());
        for (int v : f.images()) h = h * 1000003u + static_cast<std::size_t>(v) + 1;
        return h;
    }
};

}  // namespace strat
