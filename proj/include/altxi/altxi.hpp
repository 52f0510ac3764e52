#ifndef ALTXI_ALTXI_HPP
#define ALTXI_ALTXI_HPP

#include "altxi/common.hpp"
#include "altxi/complex_format.hpp"
#include "altxi/complex_ops.hpp"
#include "altxi/gamma.hpp"
#include "altxi/incomplete_gamma.hpp"
#include "altxi/mellin.hpp"
#include "altxi/quadrature.hpp"
#include "altxi/theta_kernel.hpp"
#include "altxi/zeta_family.hpp"

#endif
