#include "hodis/stencil.hpp"

#include <array>
#include <cmath>

namespace hodis {

namespace {

std::vector<StencilWeight> tensor1d_x(const std::vector<std::pair<int, double>>& w) {
    std::vector<StencilWeight> out;
    for (auto& [d, c] : w) out.push_back({d, 0, c});
    return out;
}

std::vector<StencilWeight> tensor1d_y(const std::vector<std::pair<int, double>>& w) {
    std::vector<StencilWeight> out;
    for (auto& [d, c] : w) out.push_back({0, d, c});
    return out;
}

std::vector<StencilWeight> concat(std::vector<StencilWeight> a, const std::vector<StencilWeight>& b) {
    // merge duplicate offsets so each stencil is a plain offset->weight table
    for (const auto& sb : b) {
        bool merged = false;
        for (auto& sa : a) {
            if (sa.di == sb.di && sa.dj == sb.dj) {
                sa.w += sb.w;
                merged = true;
                break;
            }
        }
        if (!merged) a.push_back(sb);
    }
    return a;
}

const std::vector<std::pair<int, double>> kSecond = {{1, 1.0}, {-1, 1.0}, {0, -2.0}};
const std::vector<std::pair<int, double>> kFourth = {
    {2, 1.0}, {1, -4.0}, {0, 6.0}, {-1, -4.0}, {-2, 1.0}};
const std::vector<std::pair<int, double>> kSixth = {
    {3, 1.0}, {2, -6.0}, {1, 15.0}, {0, -20.0}, {-1, 15.0}, {-2, -6.0}, {-3, 1.0}};
const std::vector<std::pair<int, double>> kMeanDiff = {{1, 0.5}, {-1, -0.5}};
const std::vector<std::pair<int, double>> kThird = {{2, 0.5}, {1, -1.0}, {-1, 1.0}, {-2, -0.5}};

std::vector<StencilWeight> build(StencilId id) {
    switch (id) {
        case StencilId::delta2:
            return concat(tensor1d_x(kSecond), tensor1d_y(kSecond));
        case StencilId::delta4:
            return concat(tensor1d_x(kFourth), tensor1d_y(kFourth));
        case StencilId::delta6:
            return concat(tensor1d_x(kSixth), tensor1d_y(kSixth));
        case StencilId::delta2x:
            return tensor1d_x(kSecond);
        case StencilId::delta2y:
            return tensor1d_y(kSecond);
        case StencilId::delta2x_delta2y: {
            std::vector<StencilWeight> out;
            for (auto& [dx, cx] : kSecond)
                for (auto& [dy, cy] : kSecond) out.push_back({dx, dy, cx * cy});
            return out;
        }
        case StencilId::mu_delta_x:
            return tensor1d_x(kMeanDiff);
        case StencilId::mu_delta_y:
            return tensor1d_y(kMeanDiff);
        case StencilId::mu_delta3_x:
            return tensor1d_x(kThird);
        case StencilId::mu_delta3_y:
            return tensor1d_y(kThird);
    }
    return {};
}

} // namespace

const std::vector<StencilWeight>& stencil_weights(StencilId id) {
    static const std::array<std::vector<StencilWeight>, 10> tables = [] {
        std::array<std::vector<StencilWeight>, 10> t;
        for (int k = 0; k < 10; ++k) t[k] = build(static_cast<StencilId>(k));
        return t;
    }();
    return tables[static_cast<int>(id)];
}

int stencil_radius(StencilId id) {
    int r = 0;
    for (const auto& s : stencil_weights(id)) r = std::max({r, std::abs(s.di), std::abs(s.dj)});
    return r;
}

double apply_stencil(const GridField& f, StencilId id, int i, int j) {
    double acc = 0.0;
    for (const auto& s : stencil_weights(id)) acc += s.w * f(i + s.di, j + s.dj);
    return acc;
}

double apply_stencil_power(const GridField& f, StencilId id, int power, int i, int j) {
    double acc = 0.0;
    for (const auto& s : stencil_weights(id)) acc += s.w * std::pow(f(i + s.di, j + s.dj), power);
    return acc;
}

} // namespace hodis
