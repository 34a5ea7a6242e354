#pragma once

namespace resetsde::detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace resetsde::detail
