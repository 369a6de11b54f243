#include "mlt/errors.hpp"

#include <sstream>

namespace mlt {

namespace {

std::string describe_offset(const std::vector<int>& offset) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < offset.size(); ++i) {
        os << (i ? "," : "") << offset[i];
    }
    os << ')';
    return os.str();
}

std::string with_defect(const std::string& what, double defect) {
    std::ostringstream os;
    os << what << " (defect " << defect << ')';
    return os.str();
}

}  // namespace

NotToeplitz::NotToeplitz(std::vector<int> offset, double defect)
    : Error(with_defect("not multilevel Toeplitz at offset " + describe_offset(offset), defect)),
      offset_(std::move(offset)),
      defect_(defect) {}

NotSymmetric::NotSymmetric(double defect)
    : Error(with_defect("matrix is not symmetric", defect)), defect_(defect) {}

NotConstantAntidiagonal::NotConstantAntidiagonal(std::size_t level, double defect)
    : Error(with_defect("anti-diagonals are not constant at level q=" + std::to_string(level), defect)),
      level_(level),
      defect_(defect) {}

NotBlockSymmetric::NotBlockSymmetric(std::size_t level, double defect)
    : Error(with_defect("blocks are not symmetric at level q=" + std::to_string(level), defect)),
      level_(level),
      defect_(defect) {}

NotPowerOfTwo::NotPowerOfTwo(std::size_t side)
    : Error("matrix side " + std::to_string(side) + " is not a power of two >= 2"), side_(side) {}

}  // namespace mlt
