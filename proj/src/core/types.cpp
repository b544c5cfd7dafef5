#include "types.hpp"

#include <algorithm>
#include <cctype>

namespace weyldft {

AlgebraType parse_algebra(const std::string& name) {
    if (name.size() < 2) fail(ErrorCode::InvalidAlgebra, "algebra name too short: '" + name + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    Family fam;
    switch (f) {
        case 'A': fam = Family::A; break;
        case 'B': fam = Family::B; break;
        case 'C': fam = Family::C; break;
        case 'D': fam = Family::D; break;
        case 'E': fam = Family::E; break;
        case 'F': fam = Family::F; break;
        case 'G': fam = Family::G; break;
        default: fail(ErrorCode::InvalidAlgebra, "unknown family in '" + name + "'");
    }
    const std::string digits = name.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
            return std::isdigit(c);
        }))
        fail(ErrorCode::InvalidAlgebra, "bad rank in '" + name + "'");
    long rank = std::strtol(digits.c_str(), nullptr, 10);

    auto check = [&](bool ok) {
        if (!ok) fail(ErrorCode::InvalidAlgebra, "rank out of range for family in '" + name + "'");
    };
    switch (fam) {
        case Family::A: check(rank >= 1 && rank <= 19); break;
        case Family::B: check(rank >= 3 && rank <= 19); break;
        case Family::C: check(rank >= 2 && rank <= 19); break;
        case Family::D: check(rank >= 4 && rank <= 19); break;
        case Family::E: check(rank >= 6 && rank <= 8); break;
        case Family::F: check(rank == 4); break;
        case Family::G: check(rank == 2); break;
    }
    return AlgebraType{fam, static_cast<int>(rank)};
}

std::string to_string(AlgebraType t) {
    static const char* letters = "ABCDEFG";
    return std::string(1, letters[static_cast<int>(t.family)]) + std::to_string(t.rank);
}

SignHom parse_sign(const std::string& name) {
    if (name == "1" || name == "identity") return SignHom::Identity;
    if (name == "e" || name == "det") return SignHom::Det;
    if (name == "s" || name == "short") return SignHom::Short;
    if (name == "l" || name == "long") return SignHom::Long;
    fail(ErrorCode::InvalidArgument, "unknown sign homomorphism '" + name + "'");
}

std::string to_string(SignHom s) {
    switch (s) {
        case SignHom::Identity: return "identity";
        case SignHom::Det: return "det";
        case SignHom::Short: return "short";
        case SignHom::Long: return "long";
    }
    return "?";
}

}  // namespace weyldft
