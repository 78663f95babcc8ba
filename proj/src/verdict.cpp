#include "lightchaos/verdict.hpp"

namespace lightchaos {

// printable one-liners used by reports and the CLI

std::string witness_summary(const Witness& w) {
    switch (w.kind) {
        case Witness::Kind::Transitivity:
            return "f^" + std::to_string(w.k) + "(" + w.point.str() + ") = " + w.aux_point.str() +
                   " connects " + w.U_label + " -> " + w.V_label;
        case Witness::Kind::Periodic:
            return w.point.str() + " has period " + std::to_string(w.k) + " inside " + w.U_label;
        case Witness::Kind::Sensitivity:
            return "x = " + w.aux_point.str() + ", y = " + w.point.str() + " in " + w.V_label +
                   " separate by " + w.distance.str() + " at k = " + std::to_string(w.k);
    }
    return "?";
}

std::string certificate_summary(const Certificate& c) { return c.description; }

}  // namespace lightchaos
