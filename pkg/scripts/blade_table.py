"""Print the 8x8 geometric-product table of Cl(2,0,1) in the library's basis order."""

from pgacalc.kernel import BASIS, PRODUCT_TABLE


def cell(i, j):
    k, sign = PRODUCT_TABLE[i, j]
    if sign == 0:
        return "0"
    return ("-" if sign < 0 else "") + BASIS[k]


def main():
    width = 4
    print(" " * width + "".join(b.rjust(width) for b in BASIS))
    for i, row in enumerate(BASIS):
        print(row.rjust(width) + "".join(cell(i, j).rjust(width) for j in range(8)))


if __name__ == "__main__":
    main()
