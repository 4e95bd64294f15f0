#pragma once

#include <sbar/enveloping.hpp>
#include <sbar/gl2.hpp>

namespace sbarlab {

/// Closed-form expressions for the four generators Y_(1,-1), Y_(-1,1), Y_(1,0), Y_(0,1),
/// assembled from vector-field factors rather than from the general formula.
/// All three throw std::out_of_range for any other index.
sbar::LocElement y_reference(sbar::MultiIndex alpha);
sbar::UEnvElement xi_reference(sbar::MultiIndex alpha);
sbar::UGl2Element pi1_reference(sbar::MultiIndex alpha);

} // namespace sbarlab
