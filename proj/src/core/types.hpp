#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace weyldft {

using Int = long long;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using Rat = boost::rational<Int>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

enum class Family { A, B, C, D, E, F, G };

struct AlgebraType {
    Family family;
    int rank;

    bool operator==(const AlgebraType&) const = default;
};

enum class SignHom { Identity, Det, Short, Long };

enum class ErrorCode {
    InvalidAlgebra = 1,
    InadmissibleSign,
    LevelTooSmall,
    GroupTooLarge,
    GridMismatch,
    MalformedKac,
    InvalidArgument,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

AlgebraType parse_algebra(const std::string& name);
std::string to_string(AlgebraType t);
SignHom parse_sign(const std::string& name);
std::string to_string(SignHom s);

}  // namespace weyldft
