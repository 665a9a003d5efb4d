omega sigma 0
xi tau 1
phi delta 2
xi mu 3
iota omega 4
pi psi 5
omega nu 6
phi pi 7
lambda phi 8
kappa omega 9
upsilon zeta 10
tau delta 11
kappa iota 12
iota iota 13
epsilon pi 14
iota zeta 15
kappa pi 16
theta chi 17
theta mu 18
lambda lambda 19
zeta pi 20
theta rho 21
rho gamma 22
omega chi 23
xi delta 24
kappa tau 25
psi gamma 26
epsilon omega 27
zeta pi 28
alpha tau 29
lambda epsilon 30
epsilon delta 31
mu upsilon 32
tau alpha 33
epsilon xi 34
eta sigma 35
rho omega 36
lambda pi 37
pi beta 38
epsilon beta 39
omicron omicron 40
xi upsilon 41
beta tau 42
alpha omega 43
nu omicron 44
pi upsilon 45
rho tau 46
gamma epsilon 47
