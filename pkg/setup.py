from setuptools import find_packages, setup


def getLongDescription():
    with open('README.md') as file:
        return file.read()


setup(
    name='gsslink',
    version='0.1.0',
    description='4D geometric shell shaping and AIR / post-FEC evaluation for 400ZR links.',
    long_description=getLongDescription(),
    long_description_content_type='text/markdown',
    packages=find_packages(
        include=['gsslink', 'gsslink.*'],
    ),
    install_requires=[
        'sympy==1.13.3',
        'numpy==2.2.4',
        'scipy==1.15.2',
        'tqdm==4.67.1',
    ],
    extras_require={
        'test': ['pytest>=7.1'],
    },
    entry_points={
        'console_scripts': ['gsslink=gsslink.cli.main:main'],
    },
    python_requires='>=3.9',
    classifiers=[
        'Intended Audience :: Science/Research',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Operating System :: OS Independent',
        'License :: OSI Approved :: MIT License',
        'Topic :: Scientific/Engineering',
    ],
    keywords=[
        'Optical Communications',
        'Constellation Shaping',
        'Achievable Information Rates',
        'Split-Step Fourier',
        'Hamming Codes',
        'NumPy',
        'SciPy',
    ],
    license='MIT',
)
