omicron iota 0
upsilon delta 1
sigma lambda 2
rho omega 3
psi tau 4
psi upsilon 5
iota lambda 6
zeta chi 7
kappa sigma 8
epsilon phi 9
sigma theta 10
gamma eta 11
epsilon sigma 12
omicron rho 13
beta rho 14
upsilon theta 15
theta omega 16
iota gamma 17
delta sigma 18
eta pi 19
omicron sigma 20
tau kappa 21
kappa theta 22
chi epsilon 23
omega lambda 24
sigma tau 25
lambda zeta 26
chi alpha 27
