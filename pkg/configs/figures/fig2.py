_base_ = ['../_base_/default_runtime.py']
# D and P against separation, eta in {0, pi/4, pi/2}
figure = dict(
    type='KernelCurves',
    x_min=0.01,
    x_max=2.0,
    points=200,
    etas=[0.0, 0.7853981633974483, 1.5707963267948966])
