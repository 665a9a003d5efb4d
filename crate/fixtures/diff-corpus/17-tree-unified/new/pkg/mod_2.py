inserted gamma 0.470989 changed
inserted delta 0.675341
chi omicron 0
chi phi 1 changed
psi omicron 2
psi upsilon 3
psi mu 4
gamma omicron 5
eta beta 6
omega tau 7
omega phi 8
omicron upsilon 9
beta upsilon 10
mu epsilon 11
iota upsilon 12
beta theta 13
phi delta 14
xi chi 16
xi pi 17
gamma psi 18
rho psi 19
nu upsilon 20
kappa psi 21
upsilon iota 22
delta omicron 23
alpha theta 24
tau omega 25
mu pi 26
gamma mu 27
iota rho 28
gamma eta 29
