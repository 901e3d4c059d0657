#pragma once

#include "askey/eval.hpp"
#include "askey/mutation.hpp"
#include "askey/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace askey {

/// An identity in U between two surface-syntax expressions. When `degree` is
/// set the left side is replaced by its homogeneous component of that degree.
struct Identity {
    std::string id;
    std::string lhs;
    std::string rhs;
    std::optional<int> degree;
};

namespace detail {

inline std::vector<Identity> equitable_identities() {
    return {
        {"equitable.y-yinv", "y*Y", "1", {}},
        {"equitable.yinv-y", "Y*y", "1", {}},
        {"equitable.xy", "(q*x*y - q^-1*y*x)/(q - q^-1)", "1", {}},
        {"equitable.yz", "(q*y*z - q^-1*z*y)/(q - q^-1)", "1", {}},
        {"equitable.zx", "(q*z*x - q^-1*x*z)/(q - q^-1)", "1", {}},
        {"equitable.k", "y", "k", {}},
        {"equitable.z", "z", "K + (q - q^-1)*f", {}},
        {"equitable.x", "x", "K - e*K*q^-1*(q - q^-1)", {}},
        {"equitable.e", "(1 - x*y)*q/(q - q^-1)", "e", {}},
        {"equitable.f", "(z - Y)/(q - q^-1)", "f", {}},
    };
}

inline std::vector<Identity> casimir_identities() {
    return {
        {"casimir.phi", "Phi", "e*f + (q^-1*k + q*K)/(q - q^-1)^2", {}},
        {"casimir.lambda", "Lam", "(q - q^-1)^2*Phi", {}},
        {"casimir.lambda-ef", "Lam", "(q - q^-1)^2*e*f + q^-1*k + q*K", {}},
    };
}

inline std::vector<Identity> sixforms_identities() {
    return {
        {"sixforms.1", "Lam", "q*x + q^-1*y + q*z - q*x*y*z", {}},
        {"sixforms.2", "Lam", "q^-1*x + q*y + q^-1*z - q^-1*z*y*x", {}},
        {"sixforms.3", "Lam", "q*y + q^-1*z + q*x - q*y*z*x", {}},
        {"sixforms.4", "Lam", "q^-1*y + q*z + q^-1*x - q^-1*x*z*y", {}},
        {"sixforms.5", "Lam", "q*z + q^-1*x + q*y - q*z*x*y", {}},
        {"sixforms.6", "Lam", "q^-1*z + q*x + q^-1*y - q^-1*y*x*z", {}},
    };
}

inline std::vector<Identity> nu_identities() {
    return {
        {"nu.x-1", "nx", "q*(1 - y*z)", {}},   {"nu.x-2", "nx", "q^-1*(1 - z*y)", {}},
        {"nu.y-1", "ny", "q*(1 - z*x)", {}},   {"nu.y-2", "ny", "q^-1*(1 - x*z)", {}},
        {"nu.z-1", "nz", "q*(1 - x*y)", {}},   {"nu.z-2", "nz", "q^-1*(1 - y*x)", {}},
        {"efview.e", "e", "nz/(q - q^-1)", {}}, {"efview.f", "f", "-q^-1*Y*nx/(q - q^-1)", {}},
        {"efview.nz", "nz", "(q - q^-1)*e", {}}, {"efview.nx", "nx", "-q*(q - q^-1)*k*f", {}},
    };
}

/// The identity calculus for x, y, z and nu_x, nu_y, nu_z.
inline std::vector<Identity> calculus_identities(Mutation mut) {
    std::vector<Identity> v = {
        {"prod.xy", "x*y", mut == Mutation::RelationSignFlip ? "1 + q^-1*nz" : "1 - q^-1*nz", {}},
        {"prod.yx", "y*x", "1 - q*nz", {}},
        {"prod.yz", "y*z", "1 - q^-1*nx", {}},
        {"prod.zy", "z*y", "1 - q*nx", {}},
        {"prod.zx", "z*x", "1 - q^-1*ny", {}},
        {"prod.xz", "x*z", "1 - q*ny", {}},

        {"double.xy", "(x*y - y*x)/(q - q^-1)", "nz", {}},
        {"double.yx", "(q*y*x - q^-1*x*y)/(q - q^-1)", "1 - (q + q^-1)*nz", {}},
        {"double.yz", "(y*z - z*y)/(q - q^-1)", "nx", {}},
        {"double.zy", "(q*z*y - q^-1*y*z)/(q - q^-1)", "1 - (q + q^-1)*nx", {}},
        {"double.zx", "(z*x - x*z)/(q - q^-1)", "ny", {}},
        {"double.xz", "(q*x*z - q^-1*z*x)/(q - q^-1)", "1 - (q + q^-1)*ny", {}},

        {"qcom.x-ny", "x*ny", "q^2*ny*x", {}},
        {"qcom.x-nz", "x*nz", "q^-2*nz*x", {}},
        {"qcom.y-nz", "y*nz", "q^2*nz*y", {}},
        {"qcom.y-nx", "y*nx", "q^-2*nx*y", {}},
        {"qcom.z-nx", "z*nx", "q^2*nx*z", {}},
        {"qcom.z-ny", "z*ny", "q^-2*ny*z", {}},

        {"xvx.nx-x", "nx*x", "Lam - q*y - q^-1*z", {}},
        {"xvx.x-nx", "x*nx", "Lam - q^-1*y - q*z", {}},
        {"xvx.ny-y", "ny*y", "Lam - q*z - q^-1*x", {}},
        {"xvx.y-ny", "y*ny", "Lam - q^-1*z - q*x", {}},
        {"xvx.nz-z", "nz*z", "Lam - q*x - q^-1*y", {}},
        {"xvx.z-nz", "z*nz", "Lam - q^-1*x - q*y", {}},

        {"xnxcom.x", "(x*nx - nx*x)/(q - q^-1)", "y - z", {}},
        {"xnxcom.y", "(y*ny - ny*y)/(q - q^-1)", "z - x", {}},
        {"xnxcom.z", "(z*nz - nz*z)/(q - q^-1)", "x - y", {}},

        {"dcas.x-1", "Lam", "(q*x*nx - q^-1*nx*x)/(q - q^-1) + (q + q^-1)*z", {}},
        {"dcas.x-2", "Lam", "(q*nx*x - q^-1*x*nx)/(q - q^-1) + (q + q^-1)*y", {}},
        {"dcas.y-1", "Lam", "(q*y*ny - q^-1*ny*y)/(q - q^-1) + (q + q^-1)*x", {}},
        {"dcas.y-2", "Lam", "(q*ny*y - q^-1*y*ny)/(q - q^-1) + (q + q^-1)*z", {}},
        {"dcas.z-1", "Lam", "(q*z*nz - q^-1*nz*z)/(q - q^-1) + (q + q^-1)*y", {}},
        {"dcas.z-2", "Lam", "(q*nz*z - q^-1*z*nz)/(q - q^-1) + (q + q^-1)*x", {}},

        {"nxny.nx-ny", "nx*ny", "1 - q^-1*Lam*z + q^-2*z^2", {}},
        {"nxny.ny-nx", "ny*nx", "1 - q*Lam*z + q^2*z^2", {}},
        {"nxny.ny-nz", "ny*nz", "1 - q^-1*Lam*x + q^-2*x^2", {}},
        {"nxny.nz-ny", "nz*ny", "1 - q*Lam*x + q^2*x^2", {}},
        {"nxny.nz-nx", "nz*nx", "1 - q^-1*Lam*y + q^-2*y^2", {}},
        {"nxny.nx-nz", "nx*nz", "1 - q*Lam*y + q^2*y^2", {}},

        {"comnxny.xy", "(q*nx*ny - q^-1*ny*nx)/(q - q^-1)", "1 - z^2", {}},
        {"comnxny.yz", "(q*ny*nz - q^-1*nz*ny)/(q - q^-1)", "1 - x^2", {}},
        {"comnxny.zx", "(q*nz*nx - q^-1*nx*nz)/(q - q^-1)", "1 - y^2", {}},
    };
    return v;
}

/// Identities from the computation of the image of the Casimir element of Delta.
inline std::vector<Identity> casimir_image_identities() {
    return {
        {"casimir-image.nz-z2", "nz*z^2", "q^-2*nx + q^2*ny + Lam*z - q - q^-1", {}},
        {"casimir-image.x-nx-x", "x*nx*x", "ny + nz + Lam*x - q - q^-1", {}},
        {"casimir-image.y2-ny", "y^2*ny", "q^-2*nx + q^2*nz + Lam*y - q - q^-1", {}},
        {"casimir-image.nz-nx-ny", "nz*nx*ny",
         "q^-4*nx + ny + nz + Lam*x + q^-2*Lam*y + q^-2*Lam*z - q^-1*Lam^2 - q^-1 - q^-3", {}},
        {"casimir-image.xy-sum", "x*y + y*x", "2 - (q + q^-1)*nz", {}},
        {"casimir-image.yz-sum", "y*z + z*y", "2 - (q + q^-1)*nx", {}},
        {"casimir-image.zx-sum", "z*x + x*z", "2 - (q + q^-1)*ny", {}},
    };
}

/// e^t f^t as a product of t factors (Lam - q^{1-2i} k - q^{2i-1} K)/(q - q^-1)^2.
inline std::vector<Identity> ident_identities(int max_t) {
    std::vector<Identity> v;
    for (int t = 1; t <= max_t; ++t) {
        std::string rhs;
        for (int i = 1; i <= t; ++i) {
            if (!rhs.empty()) rhs += "*";
            rhs += "(Lam - q^(" + std::to_string(1 - 2 * i) + ")*k - q^(" + std::to_string(2 * i - 1) +
                   ")*K)/(q - q^-1)^2";
        }
        v.push_back({"ident.t" + std::to_string(t), "e^" + std::to_string(t) + "*f^" + std::to_string(t), rhs, {}});
    }
    return v;
}

/// Homogeneous components of x, y, z, nu_x, nu_y, nu_z, Lambda in degrees -2..2.
inline std::vector<Identity> firsttable_identities() {
    struct Row {
        const char* name;
        const char* expr;
        const char* m1;
        const char* zero;
        const char* p1;
    };
    static const Row rows[] = {
        {"x", "x", "0", "Y", "-q^-1*nz*Y"},
        {"y", "y", "0", "y", "0"},
        {"z", "z", "-q^-1*Y*nx", "Y", "0"},
        {"nx", "nx", "nx", "0", "0"},
        {"ny", "ny", "q^-2*Y^2*nx", "Y*Lam - (q + q^-1)*Y^2", "q^-2*nz*Y^2"},
        {"nz", "nz", "0", "0", "nz"},
        {"Lam", "Lam", "0", "Lam", "0"},
    };
    std::vector<Identity> v;
    for (const auto& r : rows)
        for (int n = -2; n <= 2; ++n) {
            const char* rhs = n == -1 ? r.m1 : n == 0 ? r.zero : n == 1 ? r.p1 : "0";
            v.push_back({std::string("firsttable.") + r.name + ".deg" + std::to_string(n), r.expr, rhs, n});
        }
    return v;
}

} // namespace detail

/// Identities checked by the u-identities suite.
inline std::vector<Identity> u_identity_registry(Mutation mut = Mutation::None) {
    std::vector<Identity> v;
    for (auto part : {detail::equitable_identities(), detail::casimir_identities(), detail::sixforms_identities(),
                      detail::nu_identities(), detail::calculus_identities(mut),
                      detail::casimir_image_identities(), detail::ident_identities(4)})
        v.insert(v.end(), part.begin(), part.end());
    return v;
}

/// Identities checked by the grading suite.
inline std::vector<Identity> grading_registry() { return detail::firsttable_identities(); }

/// Everything, for the numeric oracle.
inline std::vector<Identity> full_registry(Mutation mut = Mutation::None) {
    std::vector<Identity> v = u_identity_registry(mut);
    for (auto& i : grading_registry()) v.push_back(std::move(i));
    return v;
}

/// Both sides normalized in U and compared.
inline Check check_identity(const Identity& ident, Mutation mut = Mutation::None) {
    return timed([&] {
        UElement lhs = parse_u(ident.lhs);
        if (ident.degree) lhs = grade_project(lhs, *ident.degree + (mut == Mutation::WrongGradingDegree ? 1 : 0));
        return equality_check(ident.id, parse_u(ident.rhs), lhs, ident.lhs + " = " + ident.rhs);
    });
}

} // namespace askey
