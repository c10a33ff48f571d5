#include "kc/blocks.hpp"

#include <sstream>
#include <stdexcept>

namespace kc {

const char* const kBlockTypeNames[kNumBlockTypes] = {"I+",  "I",  "I-",  "II+", "II",
                                                     "II-", "III", "t1", "t2"};

// Rows: Iv+, Iv0, Iv-, h1+, h1-, h2, kappa. Columns in BlockType order.
const int kParamTable[7][kNumBlockTypes] = {
    {1, 0, 0, 1, 1, 0, 1, 0, 1},  // Iv+
    {0, 1, 0, 1, 0, 1, 1, 0, 0},  // Iv0
    {0, 0, 1, 0, 1, 1, 1, 1, 1},  // Iv-
    {1, 1, 1, 2, 2, 0, 1, 1, 0},  // h1+
    {1, 1, 1, 0, 2, 2, 1, 1, 2},  // h1-
    {1, 1, 1, 0, 0, 0, 1, 1, 0},  // h2
    {0, 0, 0, 0, 0, 0, 0, 1, 1},  // kappa
};

// Rows: a+, a-, h+, h-, eta, sigma.
const int kDerivedTable[6][kNumBlockTypes] = {
    {0, 0, 0, 1, 0, 0, 1, 0, 0},   // a+
    {0, 0, 0, 0, 0, 1, 1, 0, 1},   // a-
    {0, 0, 0, 1, 1, 0, 0, 0, 0},   // h+
    {0, 0, 0, 0, 1, 1, 0, 0, 1},   // h-
    {0, -1, 0, 0, 0, 0, 1, 0, 1},  // eta
    {0, -1, 0, 0, 1, 0, 0, 0, 1},  // sigma
};

int& BlockVector::operator[](int i) {
    switch (i) {
        case TY_I_PLUS: return x_plus;
        case TY_I: return x;
        case TY_I_MINUS: return x_minus;
        case TY_II_PLUS: return y_plus;
        case TY_II: return y;
        case TY_II_MINUS: return y_minus;
        case TY_III: return z;
        case TY_TAU1: return t1;
        case TY_TAU2: return t2;
    }
    throw std::out_of_range("BlockVector index");
}

int BlockVector::operator[](int i) const { return const_cast<BlockVector&>(*this)[i]; }

BlockVector BlockVector::operator+(const BlockVector& o) const {
    BlockVector r;
    for (int i = 0; i < kNumBlockTypes; ++i) r[i] = (*this)[i] + o[i];
    return r;
}

int BlockVector::entry_sum() const {
    int s = 0;
    for (int i = 0; i < kNumBlockTypes; ++i) s += (*this)[i];
    return s;
}

bool BlockVector::nonnegative() const {
    for (int i = 0; i < kNumBlockTypes; ++i)
        if ((*this)[i] < 0) return false;
    return true;
}

std::string BlockVector::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < kNumBlockTypes; ++i) {
        if ((*this)[i] == 0) continue;
        if (any) os << ' ';
        os << kBlockTypeNames[i] << ':' << (*this)[i];
        any = true;
    }
    if (!any) os << '0';
    return os.str();
}

BlockVector BlockVector::unit(int type) {
    BlockVector v;
    v[type] = 1;
    return v;
}

int& ParamVector::operator[](int i) {
    switch (i) {
        case 0: return iv_plus;
        case 1: return iv_zero;
        case 2: return iv_minus;
        case 3: return h1_plus;
        case 4: return h1_minus;
        case 5: return h2;
        case 6: return kappa;
    }
    throw std::out_of_range("ParamVector index");
}

int ParamVector::operator[](int i) const { return const_cast<ParamVector&>(*this)[i]; }

ParamVector ParamVector::operator+(const ParamVector& o) const {
    ParamVector r;
    for (int i = 0; i < 7; ++i) r[i] = (*this)[i] + o[i];
    return r;
}

std::string ParamVector::to_string() const {
    std::ostringstream os;
    os << '(' << iv_plus << ',' << iv_zero << ',' << iv_minus << ',' << h1_plus << ','
       << h1_minus << ',' << h2 << ',' << kappa << ')';
    return os.str();
}

std::string DerivedVector::to_string() const {
    std::ostringstream os;
    os << "a+=" << a_plus << " a-=" << a_minus << " h+=" << h_plus << " h-=" << h_minus
       << " eta=" << eta << " sigma=" << sigma;
    return os.str();
}

ParamVector params(const BlockVector& xi) {
    ParamVector p;
    for (int r = 0; r < 7; ++r) {
        int acc = 0;
        for (int t = 0; t < kNumBlockTypes; ++t) acc += kParamTable[r][t] * xi[t];
        p[r] = acc;
    }
    return p;
}

DerivedVector derived(const ParamVector& p) {
    const int iv = p.iv_plus + p.iv_zero + p.iv_minus;
    auto half = [](int num, const char* what) {
        if (num % 2 != 0)
            throw std::runtime_error(std::string("non-realizable parameter vector: ") + what +
                                     " numerator is odd");
        return num / 2;
    };
    DerivedVector d;
    d.a_plus = half(iv - p.h1_minus, "a+");
    d.a_minus = half(iv - p.h1_plus, "a-");
    d.h_plus = half(p.h1_plus - p.h2, "h+");
    d.h_minus = half(p.h1_minus - p.h2, "h-");
    d.eta = p.iv_plus + p.iv_minus - half(p.h1_plus + p.h1_minus, "eta");
    d.sigma = half(p.iv_plus - p.iv_zero + p.iv_minus - p.h2, "sigma");
    return d;
}

DerivedVector derived_of(const BlockVector& xi) {
    DerivedVector d;
    int vals[6];
    for (int r = 0; r < 6; ++r) {
        int acc = 0;
        for (int t = 0; t < kNumBlockTypes; ++t) acc += kDerivedTable[r][t] * xi[t];
        vals[r] = acc;
    }
    d.a_plus = vals[0];
    d.a_minus = vals[1];
    d.h_plus = vals[2];
    d.h_minus = vals[3];
    d.eta = vals[4];
    d.sigma = vals[5];
    return d;
}

bool is_universal_type(int type) {
    for (int u : kUniversalTypes)
        if (u == type) return true;
    return false;
}

bool is_admissible(const BlockVector& xi) {
    if (!xi.nonnegative()) return false;
    int rest[2];
    int k = 0;
    for (int t = 0; t < kNumBlockTypes; ++t) {
        if (xi[t] == 0 || is_universal_type(t)) continue;
        if (k == 2) return false;  // more than two non-universal types
        rest[k++] = t;
    }
    if (k < 2) return true;
    for (const auto& [u, v] : kAdmissibleEdges)
        if ((rest[0] == u && rest[1] == v) || (rest[0] == v && rest[1] == u)) return true;
    return false;
}

BlockVector reconstruct(const ParamVector& p) {
    auto fail = [](const std::string& why) -> BlockVector {
        throw std::runtime_error("not realizable: " + why);
    };
    for (int i = 0; i < 7; ++i)
        if (p[i] < 0) return fail("negative parameter");

    DerivedVector d = derived(p);  // throws on parity violations

    BlockVector xi;
    if (p.kappa == 0) {
        if (d.eta < 0) {
            // I-disks present, so no II or III
            xi.x = -d.eta;
            if (d.sigma != d.eta) return fail("sigma/eta mismatch in the I case");
            if (d.a_plus != d.h_plus || d.a_minus != d.h_minus)
                return fail("a/h mismatch in the I case");
            xi.y_plus = d.a_plus;
            xi.y_minus = d.a_minus;
            xi.x_plus = p.iv_plus - xi.y_plus;
            xi.x_minus = p.iv_minus - xi.y_minus;
            if (p.iv_zero != xi.x + xi.y_plus + xi.y_minus)
                return fail("axis count mismatch in the I case");
        } else if (d.eta > 0) {
            xi.z = d.eta;
            xi.y_plus = d.h_plus;
            xi.y_minus = d.h_minus;
            xi.x_plus = p.iv_plus - xi.y_plus - xi.z;
            xi.x_minus = p.iv_minus - xi.y_minus - xi.z;
            if (p.iv_zero != xi.y_plus + xi.y_minus + xi.z)
                return fail("axis count mismatch in the III case");
        } else {
            if (d.sigma < 0) return fail("negative II count");
            xi.y = d.sigma;
            xi.y_plus = d.a_plus;
            xi.y_minus = d.a_minus;
            xi.x_plus = p.iv_plus - xi.y_plus - xi.y;
            xi.x_minus = p.iv_minus - xi.y_minus - xi.y;
            if (p.iv_zero != xi.y_plus + xi.y_minus)
                return fail("axis count mismatch in the II case");
        }
    } else {
        // tau-disks exclude I and II+
        if (d.a_plus > 0 && d.h_plus > 0) return fail("III and II cannot both meet tau-disks");
        if (d.a_plus > 0) {
            xi.z = d.a_plus;
            xi.t1 = p.kappa;
            xi.y_minus = d.h_minus;
            xi.x_plus = p.iv_plus - xi.z;
            xi.x_minus = p.iv_minus - xi.y_minus - xi.z - xi.t1;
            if (p.iv_zero != xi.z + xi.y_minus) return fail("axis count mismatch (kappa, III)");
        } else if (d.h_plus > 0) {
            xi.y = d.h_plus;
            xi.t2 = p.kappa;
            xi.y_minus = d.a_minus - xi.t2;
            xi.x_plus = p.iv_plus - xi.y - xi.t2;
            xi.x_minus = p.iv_minus - xi.y_minus - xi.y - xi.t2;
            if (p.iv_zero != xi.y_minus) return fail("axis count mismatch (kappa, II)");
        } else {
            if (d.eta != d.sigma) return fail("eta/sigma mismatch in the tau case");
            xi.t2 = d.eta;
            xi.t1 = p.kappa - xi.t2;
            xi.y_minus = d.a_minus - xi.t2;
            xi.x_plus = p.iv_plus - xi.t2;
            xi.x_minus = p.iv_minus - xi.y_minus - xi.t1 - xi.t2;
            if (p.iv_zero != xi.y_minus) return fail("axis count mismatch (kappa, tau)");
        }
    }

    if (!xi.nonnegative()) return fail("negative intermediate count");
    if (!(params(xi) == p)) return fail("post-check mismatch");
    if (!is_admissible(xi)) return fail("reconstructed support is not admissible");
    return xi;
}

}  // namespace kc
