#include "ghl/forms.hpp"

namespace ghl {

template KForm<Exact> coboundary(const Bracket<Exact>&, const KForm<Exact>&);
template KForm<Approx> coboundary(const Bracket<Approx>&, const KForm<Approx>&);

} // namespace ghl
