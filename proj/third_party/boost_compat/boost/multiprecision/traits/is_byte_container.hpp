///////////////////////////////////////////////////////////////////////////////
//  Copyright 2015 John Maddock. Distributed under the Boost
//  Software License, Version 1.0. (See accompanying file
//  LICENSE_1_0.txt or copy at http://www.boost.org/LICENSE_1_0.txt)
//
//  SFINAE-safe replacement for the Boost 1.74 header of the same name, taken
//  ahead of the system copy via the include path. The shipped version accesses
//  std::iterator_traits<C::const_iterator>::value_type unconditionally, which
//  is a hard error for types whose const_iterator is void (Eigen 3.4 dense
//  two-dimensional matrices). Detection is routed through a substitution
//  context so the trait degrades to false instead.

#ifndef BOOST_IS_BYTE_CONTAINER_HPP
#define BOOST_IS_BYTE_CONTAINER_HPP

#include <iterator>
#include <type_traits>
#include <boost/mpl/has_xxx.hpp>
#include <boost/type_traits/is_integral.hpp>
#include <boost/type_traits/remove_cv.hpp>

namespace boost { namespace multiprecision { namespace detail {

BOOST_MPL_HAS_XXX_TRAIT_NAMED_DEF(has_member_const_iterator, const_iterator, false)

template <class C, class = void>
struct byte_container_value_type
{
   typedef void type;
};

template <class C>
struct byte_container_value_type<C,
   typename std::conditional<false,
      typename std::iterator_traits<typename C::const_iterator>::value_type, void>::type>
{
   typedef typename boost::remove_cv<
      typename std::iterator_traits<typename C::const_iterator>::value_type>::type type;
};

template <class V>
struct is_byte_sized_integral
{
   static const bool value = boost::is_integral<V>::value && (sizeof(V) == 1);
};

template <>
struct is_byte_sized_integral<void>
{
   static const bool value = false;
};

template <class C, bool b>
struct is_byte_container_imp
{
   static const bool value = is_byte_sized_integral<typename byte_container_value_type<C>::type>::value;
};

template <class C>
struct is_byte_container_imp<C, false> : public boost::false_type
{};

template <class C>
struct is_byte_container : public is_byte_container_imp<C, has_member_const_iterator<C>::value>
{};

}}} // namespace boost::multiprecision::detail

#endif // BOOST_IS_BYTE_CONTAINER_HPP
