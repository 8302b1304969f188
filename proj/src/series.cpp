#include "fundcheck/series.hpp"

#include "fundcheck/error.hpp"

namespace fundcheck {

void MonthlySeries::validate() const {
    if (values.size() < kMinMonths) {
        throw Error::too_short(values.size(), kMinMonths);
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0)) {
            throw Error(errc::non_positive_price,
                        "NonPositivePrice " + ticker + " at " + month_at(i).to_string() +
                            ": monthly value must be > 0");
        }
    }
}

}  // namespace fundcheck
