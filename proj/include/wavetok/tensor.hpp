#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wavetok {

// Row-major 2D float buffer.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<float> v;

    Mat() = default;
    Mat(int r, int c, float fill = 0.0f)
        : rows(r), cols(c), v(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill) {}

    float& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
    float at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }
    std::size_t size() const { return v.size(); }
};

// Row-major h x w x c tensor; the channel index varies fastest.
struct Tensor3 {
    int h = 0;
    int w = 0;
    int c = 0;
    std::vector<float> v;

    Tensor3() = default;
    Tensor3(int h_, int w_, int c_, float fill = 0.0f)
        : h(h_), w(w_), c(c_),
          v(static_cast<std::size_t>(h_) * w_ * c_, fill) {}

    float& at(int i, int j, int k) { return v[(static_cast<std::size_t>(i) * w + j) * c + k]; }
    float at(int i, int j, int k) const { return v[(static_cast<std::size_t>(i) * w + j) * c + k]; }
    std::size_t size() const { return v.size(); }
};

// Shape-generic tensor used by the binary tensor-file format.
struct Tensor {
    std::vector<std::uint64_t> dims;
    std::vector<float> data;
};

}  // namespace wavetok
