epsilon xi 0
alpha beta 1
upsilon kappa 2
phi sigma 3
xi chi 4
delta phi 5
omicron gamma 6
iota epsilon 7
epsilon rho 8
omicron beta 9
eta rho 10
iota kappa 11
upsilon tau 12
delta upsilon 13
iota tau 14
beta zeta 15
beta phi 16
gamma kappa 17
beta mu 18
sigma chi 19
beta delta 20
zeta delta 21
nu alpha 22
zeta iota 23
pi kappa 24
tau delta 25
mu lambda 26
mu epsilon 27
psi lambda 28
zeta upsilon 29
upsilon tau 30
upsilon psi 31
tau beta 32
gamma lambda 33
theta xi 34
mu tau 35
tau delta 36
omega zeta 37
gamma sigma 38
gamma sigma 39
pi eta 40
psi beta 41
nu omicron 42
zeta tau 43
epsilon tau 44
mu gamma 45
beta gamma 46
