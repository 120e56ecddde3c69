#ifndef BOOLNET_CONFIG_HPP
#define BOOLNET_CONFIG_HPP

namespace boolnet {

/// Hard ceiling on function arity. Row encodings use 32-bit words and a
/// truth table of arity 28 already occupies 32 MiB, so this is not adjustable.
inline constexpr int kMaxArity = 28;

/// Current arity cap (default 26). Exceeding it raises limit_error.
int arity_cap();

/// Set the arity cap, 1 <= cap <= kMaxArity. Process wide.
void set_arity_cap(int cap);

} // namespace boolnet

#endif
