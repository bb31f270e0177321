#include "scc/aperiodic.hpp"

#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

namespace scc {

Word thue_morse_prefix(std::size_t len) {
    std::vector<Letter> ls;
    ls.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        ls.push_back(Letter(static_cast<int>(std::popcount(i) % 2u), false));
    return Word(std::move(ls));
}

std::vector<DistinctElement> distinct_elements(std::size_t count, const GradedPresentation& p) {
    if (count < 1) throw std::invalid_argument("distinct elements: count must be >= 1");
    if (p.alphabet().size() < 2)
        throw std::invalid_argument("distinct elements: need at least two generators");
    if (p.params().mode != Mode::Strict)
        throw std::invalid_argument("distinct elements: strict parameters required");
    const Word stream = thue_morse_prefix(count);
    std::vector<DistinctElement> out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
        DistinctElement e;
        e.word = stream.subword(0, i);
        // The predecessor is stream[0..i-1), so predecessor^-1 * prefix
        // reduces to the single stream letter at position i-1.
        e.certificate.factor = stream.subword(i - 1, i);
        e.certificate.power = max_power_factor(e.certificate.factor).k;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace scc
