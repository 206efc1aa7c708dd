#ifndef CHARP_PARSE_HPP
#define CHARP_PARSE_HPP

#include <string>
#include <vector>

#include "charp/perfection.hpp"
#include "charp/polynomial.hpp"

namespace charp {

/// Ring descriptor of the form "GF(<p>)[v1,v2,...]". The order and limits
/// are supplied out of band (they have no textual form).
RingPtr parse_ring(const std::string& text, MonomialOrder order = MonomialOrder::grevlex,
                   Limits limits = {});

/// Polynomial grammar: terms joined by '+'/'-'; a term is an integer
/// coefficient, 'coeff*mono' or a bare mono; a mono is variable names
/// with optional '^k', joined by '*'. Whitespace is insignificant.
/// Integer literals are reduced mod p.
Polynomial parse_poly(const std::string& text, const RingPtr& ring);

/// Comma-separated polynomial list (ideal generators).
std::vector<Polynomial> parse_poly_list(const std::string& text, const RingPtr& ring);

/// "root(<poly>,<e>)", or a bare polynomial meaning level 0.
PerfElement parse_perf(const std::string& text, const RingPtr& ring);

}  // namespace charp

#endif
