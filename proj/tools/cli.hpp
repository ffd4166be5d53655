#ifndef SFN_CLI_HPP
#define SFN_CLI_HPP

#include <complex>
#include <string>

namespace sfn {

int run_cli(int argc, char** argv);

// Complex literal grammar used by the CLI: a+bi, bi, a (optional signs,
// exponents allowed).  parse(format(z)) == z for finite doubles.
std::complex<double> parse_complex(std::string s);
std::string format_complex(std::complex<double> z);

}  // namespace sfn

#endif
