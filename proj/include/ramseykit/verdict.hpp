#pragma once

#include <string>

#include "ramseykit/errors.hpp"

namespace ramseykit {

// Shared verdict vocabulary. Every operation reports one of these; the CLI
// maps them onto the exit-status contract (0 positive, 1 negative,
// 2 inconclusive / cap).
enum class Verdict {
    True,
    False,
    Pass,
    Fail,
    VacuousTrue,
    Inconclusive,
    Closed,
    CapExceeded,
    Maximal,
    Extendable,
    Found,
    NotFound,
};

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::True: return "TRUE";
    case Verdict::False: return "FALSE";
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::VacuousTrue: return "VACUOUS_TRUE";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::Closed: return "CLOSED";
    case Verdict::CapExceeded: return "CAP_EXCEEDED";
    case Verdict::Maximal: return "MAXIMAL";
    case Verdict::Extendable: return "EXTENDABLE";
    case Verdict::Found: return "FOUND";
    case Verdict::NotFound: return "NOT_FOUND";
    }
    throw Error("unhandled verdict");
}

inline Verdict verdict_from_string(const std::string& s) {
    for (Verdict v : {Verdict::True, Verdict::False, Verdict::Pass, Verdict::Fail,
                      Verdict::VacuousTrue, Verdict::Inconclusive, Verdict::Closed,
                      Verdict::CapExceeded, Verdict::Maximal, Verdict::Extendable,
                      Verdict::Found, Verdict::NotFound}) {
        if (to_string(v) == s) return v;
    }
    throw ParseError("unknown verdict: " + s);
}

// Exit-status contract: 0 = TRUE/PASS, 1 = FALSE/counterexample,
// 2 = INCONCLUSIVE (cap or budget).
inline int exit_code(Verdict v) {
    switch (v) {
    case Verdict::True:
    case Verdict::Pass:
    case Verdict::VacuousTrue:
    case Verdict::Closed:
    case Verdict::Maximal:
    case Verdict::Found:
        return 0;
    case Verdict::False:
    case Verdict::Fail:
    case Verdict::Extendable:
    case Verdict::NotFound:
        return 1;
    case Verdict::Inconclusive:
    case Verdict::CapExceeded:
        return 2;
    }
    throw Error("unhandled verdict");
}

} // namespace ramseykit
