#include "ghl/linalg.hpp"
#include "ghl/forms.hpp"

namespace ghl {

template class Mat<Exact>;
template class Mat<Approx>;
template class RowSpace<Rational>;
template class RowSpace<Numeric>;
template class KForm<Exact>;
template class KForm<Approx>;
template class MultiTensor<Exact>;
template class MultiTensor<Approx>;

} // namespace ghl
