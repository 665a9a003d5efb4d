psi zeta 0
delta upsilon 1
lambda pi 2
iota beta 3
upsilon psi 4
epsilon omicron 5
lambda iota 6
psi alpha 7
epsilon xi 8
iota kappa 9
zeta epsilon 10
mu lambda 11
rho psi 12
pi delta 13
beta eta 14
zeta delta 15
chi xi 16
gamma kappa 17
zeta nu 18
omicron mu 19
sigma phi 20
mu pi 21
pi eta 22
kappa omicron 23
omega kappa 24
lambda rho 25
lambda nu 26
delta chi 27
delta upsilon 28
nu alpha 29
epsilon nu 30
gamma nu 31
psi omicron 32
rho chi 33
