#pragma once

#include <memory>
#include <vector>

namespace feasflow::detail {

// std::vector that default-initializes trivial elements instead of zeroing
// them. Large scratch buffers are written before they are read, so the
// zeroing pass is pure memory traffic.
template <class T, class A = std::allocator<T>>
struct default_init_allocator : A {
  using A::A;

  template <class U>
  struct rebind {
    using other =
        default_init_allocator<U, typename std::allocator_traits<A>::template rebind_alloc<U>>;
  };

  template <class U>
  void construct(U* p) noexcept(std::is_nothrow_default_constructible_v<U>) {
    ::new (static_cast<void*>(p)) U;
  }
  template <class U, class... Args>
  void construct(U* p, Args&&... args) {
    std::allocator_traits<A>::construct(static_cast<A&>(*this), p, std::forward<Args>(args)...);
  }
};

template <class T>
using raw_vector = std::vector<T, default_init_allocator<T>>;

}  // namespace feasflow::detail
