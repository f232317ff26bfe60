// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/convolution.hpp"

#include "wightlab/errors.hpp"

namespace wightlab {

namespace {

bool resolve_shape(const Lattice& field, const Lattice& kernel) {
    if (field.dim != kernel.dim || field.spacing != kernel.spacing)
        throw ShapeError("field and kernel lattices differ in dimension or spacing");
    if (kernel.sites_per_axis == field.sites_per_axis) return false;
    if (kernel.sites_per_axis == 2 * field.sites_per_axis) return true;
    throw ShapeError("kernel lattice must match the field lattice or be twice its size");
}

// position of every field site inside the corner block of the work lattice
std::vector<std::size_t> corner_map(const Lattice& field, const Lattice& work) {
    std::vector<std::size_t> map(field.site_count());
    for (std::size_t s = 0; s < map.size(); ++s) map[s] = work.site_index(field.multi_index(s));
    return map;
}

void embed(const std::vector<std::size_t>& map, std::size_t work_size, const double* in,
           double* out) {
    std::fill(out, out + work_size, 0.0);
    for (std::size_t s = 0; s < map.size(); ++s) out[map[s]] = in[s];
}

void extract(const std::vector<std::size_t>& map, const double* in, double* out) {
    for (std::size_t s = 0; s < map.size(); ++s) out[s] = in[map[s]];
}

}  // namespace

Convolver::Convolver(const Lattice& field_lattice, const ScalarField& kernel)
    : field_(field_lattice), work_(kernel.lattice) {
    field_.validate();
    padded_ = resolve_shape(field_, work_);
    map_ = corner_map(field_, work_);
    fft_ = std::make_shared<RealFft>(std::vector<int>(work_.dim, work_.sites_per_axis));
    kernel_hat_.resize(fft_->complex_size());
    fft_->forward(kernel.values.data(), kernel_hat_.data());
    const double scale = field_.cell_volume() / double(work_.site_count());
    for (auto& v : kernel_hat_) v *= scale;
}

ScalarField Convolver::apply(const ScalarField& f) const {
    if (!(f.lattice == field_)) throw ShapeError("field lattice does not match the convolver");
    std::vector<double> buf(work_.site_count());
    embed(map_, buf.size(), f.values.data(), buf.data());
    std::vector<std::complex<double>> spec(fft_->complex_size());
    fft_->forward(buf.data(), spec.data());
    for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= kernel_hat_[i];
    fft_->backward(spec.data(), buf.data());
    ScalarField out(field_);
    extract(map_, buf.data(), out.values.data());
    return out;
}

QuaternionConvolver::QuaternionConvolver(const Lattice& field_lattice, const QuaternionField& kernel)
    : field_(field_lattice), work_(kernel.lattice) {
    field_.validate();
    padded_ = resolve_shape(field_, work_);
    map_ = corner_map(field_, work_);
    fft_ = std::make_shared<RealFft>(std::vector<int>(work_.dim, work_.sites_per_axis));
    const double scale = field_.cell_volume() / double(work_.site_count());
    std::vector<double> comp(work_.site_count());
    for (int c = 0; c < 4; ++c) {
        for (std::size_t s = 0; s < comp.size(); ++s) comp[s] = kernel.values[s][c];
        kernel_hat_[c].resize(fft_->complex_size());
        fft_->forward(comp.data(), kernel_hat_[c].data());
        for (auto& v : kernel_hat_[c]) v *= scale;
    }
}

QuaternionField QuaternionConvolver::apply(const QuaternionField& f) const {
    if (!(f.lattice == field_)) throw ShapeError("field lattice does not match the convolver");
    const std::size_t nf = field_.site_count(), nw = work_.site_count(), nc = fft_->complex_size();
    std::vector<double> comp(nf), buf(nw);
    std::array<std::vector<std::complex<double>>, 4> fhat;
    for (int c = 0; c < 4; ++c) {
        for (std::size_t s = 0; s < nf; ++s) comp[s] = f.values[s][c];
        embed(map_, buf.size(), comp.data(), buf.data());
        fhat[c].resize(nc);
        fft_->forward(buf.data(), fhat[c].data());
    }
    const Quaternion basis[4] = {kQuatOne, kQuatI, kQuatJ, kQuatK};
    QuaternionField out(field_);
    std::vector<std::complex<double>> acc(nc);
    for (int oc = 0; oc < 4; ++oc) {
        std::fill(acc.begin(), acc.end(), std::complex<double>{});
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                double sgn = (basis[a] * basis[b])[oc];
                if (sgn == 0) continue;
                for (std::size_t i = 0; i < nc; ++i) acc[i] += sgn * kernel_hat_[a][i] * fhat[b][i];
            }
        fft_->backward(acc.data(), buf.data());
        extract(map_, buf.data(), comp.data());
        for (std::size_t s = 0; s < nf; ++s) out.values[s][oc] = comp[s];
    }
    return out;
}

ScalarField convolve(const ScalarField& f, const ScalarField& kernel) {
    return Convolver(f.lattice, kernel).apply(f);
}

QuaternionField convolve(const QuaternionField& f, const QuaternionField& kernel) {
    return QuaternionConvolver(f.lattice, kernel).apply(f);
}

}  // namespace wightlab
